#include "drgt/count_formulas.hpp"

#include "drgt/cosine.hpp"
#include "drgt/tightness.hpp"

#include <sstream>

namespace drgt {

namespace {

template <class F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static bool rational(const Rational&) { return true; }
  static Rational rational_value(const Rational& v) { return v; }
  static std::string str(const Rational& v) { return to_string(v); }
};

template <>
struct FieldOps<QuadExt> {
  static bool rational(const QuadExt& v) { return v.is_rational(); }
  static Rational rational_value(const QuadExt& v) { return v.rat_part(); }
  static std::string str(const QuadExt& v) {
    std::ostringstream os;
    os << to_string(v.rat_part()) << " + " << to_string(v.quad_part()) << "*theta";
    return os.str();
  }
};

template <class F>
class FormulaChecker {
 public:
  FormulaChecker(const Graph& g, const IntersectionArray& arr, const EdgePartition& part,
                 std::vector<F> sig, F one, CountFormulaReport& rep)
      : g_(g), arr_(arr), part_(part), sig_(std::move(sig)), one_(std::move(one)), rep_(rep) {
    for (int z : part_.cell(1, 1)) dist_d11_.push_back(bfs_distances(g_, z));
  }

  long shell_count(int z, int dist) const {
    long c = 0;
    for (const auto& du : dist_d11_)
      if (du[z] == dist) ++c;
    return c;
  }

  void record(const char* formula, int i, int z, const F& expected, long actual) {
    ++rep_.checks;
    if (!FieldOps<F>::rational(expected)) {
      rep_.mismatches.push_back({formula, i, z, FieldOps<F>::str(expected), actual});
      rep_.max_deviation = std::max(rep_.max_deviation, Rational(1));
      return;
    }
    Rational want = FieldOps<F>::rational_value(expected);
    Rational dev = abs(want - actual);
    rep_.max_deviation = std::max(rep_.max_deviation, dev);
    if (dev != 0)
      rep_.mismatches.push_back({formula, i, z, FieldOps<F>::str(expected), actual});
  }

  void run() {
    int d = arr_.d();
    const F& s1 = sig_[1];
    const F& s2 = sig_[2];
    F a1 = one_ * rat(arr_.a(1));
    F frac = a1 / (one_ + s1);

    // offdiagonal cells: the two-shell solution
    for (int i = 1; i <= d; ++i) {
      F den = sig_[i - 1] - sig_[i];
      F low = frac * ((s1 * sig_[i - 1] - sig_[i]) / den);
      F high = frac * ((sig_[i - 1] - s1 * sig_[i]) / den);
      for (const std::pair<int, int>& cell : {std::pair<int, int>{i - 1, i}, std::pair<int, int>{i, i - 1}}) {
        for (int z : part_.cell(cell.first, cell.second)) {
          record("two-shell lower", i, z, low, shell_count(z, i - 1));
          record("two-shell upper", i, z, high, shell_count(z, i));
        }
      }
    }

    // diagonal cells: the three-shell solution, which consumes the brute
    // count of the closest shell
    for (int i = 1; i <= d - 1; ++i) {
      F den = sig_[i] - sig_[i + 1];
      F ratio = (one_ - s1) / (one_ + s1);
      for (int z : part_.cell(i, i)) {
        long n_low = shell_count(z, i - 1);
        F n_low_f = one_ * rat(n_low);
        F far = n_low_f * ((sig_[i - 1] - sig_[i]) / den) + a1 * ratio * (sig_[i] / den);
        F mid = -(n_low_f * ((sig_[i - 1] - sig_[i + 1]) / den)) + a1 * (s1 + s1) / (one_ + s1) -
                a1 * ratio * (sig_[i + 1] / den);
        record("three-shell far", i, z, far, shell_count(z, i + 1));
        record("three-shell mid", i, z, mid, shell_count(z, i));
      }
    }
    // the a_d != 0 diagonal end cell (empty for tight graphs)
    if (arr_.a(d) != 0 && !part_.cell(d, d).empty()) {
      F den = sig_[d - 1] - sig_[d];
      F ratio = (one_ - s1) / (one_ + s1);
      for (int z : part_.cell(d, d)) {
        F low = -(a1 * ratio * (sig_[d] / den));
        F high = a1 + a1 * ratio * (sig_[d] / den);
        record("end-cell lower", d, z, low, shell_count(z, d - 1));
        record("end-cell upper", d, z, high, shell_count(z, d));
      }
    }

    // closed forms for the closest/farthest shells on the diagonal
    F s2diff = s1 * s1 - s2;
    F sm = s1 - s2;
    for (int i = 1; i <= d - 1; ++i) {
      F low = (one_ * rat(arr_.c(i))) * s2diff * (sig_[i] - sig_[i + 1]) /
              (sm * (s1 * sig_[i] - sig_[i + 1]));
      F high = (one_ * rat(arr_.b(i))) * s2diff * (sig_[i - 1] - sig_[i]) /
               (sm * (sig_[i - 1] - s1 * sig_[i]));
      for (int z : part_.cell(i, i)) {
        record("diagonal closest shell", i, z, low, shell_count(z, i - 1));
        record("diagonal farthest shell", i, z, high, shell_count(z, i + 1));
      }
    }

    // neighbor counts between consecutive diagonal cells
    for (int i = 1; i <= d - 1; ++i) {
      F down = (one_ * rat(arr_.c(i))) * (sig_[i] - sig_[i + 1]) * (s1 * sig_[i - 1] - sig_[i]) /
               ((sig_[i - 1] - sig_[i]) * (s1 * sig_[i] - sig_[i + 1]));
      F up = (one_ * rat(arr_.b(i))) * (sig_[i - 1] - sig_[i]) * (sig_[i] - s1 * sig_[i + 1]) /
             ((sig_[i] - sig_[i + 1]) * (sig_[i - 1] - s1 * sig_[i]));
      for (int z : part_.cell(i, i)) {
        record("diagonal step down", i, z, down, part_.count_into(g_, z, i - 1, i - 1));
        record("diagonal step up", i, z, up, part_.count_into(g_, z, i + 1, i + 1));
      }
    }

    // neighbor counts from offdiagonal cells into the previous diagonal cell
    for (int i = 2; i <= d; ++i) {
      F num = (one_ - s1) * (sig_[i - 1] * sig_[i - 1] - sig_[i - 2] * sig_[i]);
      F den = (sig_[i - 1] - sig_[i]) * (sig_[i - 2] - s1 * sig_[i - 1]);
      F want = (one_ * rat(arr_.a(i - 1))) * num / den;
      for (const std::pair<int, int>& cell : {std::pair<int, int>{i - 1, i}, std::pair<int, int>{i, i - 1}}) {
        for (int z : part_.cell(cell.first, cell.second))
          record("offdiagonal into diagonal", i, z, want,
                 part_.count_into(g_, z, i - 1, i - 1));
      }
    }
  }

 private:
  const Graph& g_;
  const IntersectionArray& arr_;
  const EdgePartition& part_;
  std::vector<F> sig_;
  F one_;
  CountFormulaReport& rep_;
  std::vector<std::vector<int>> dist_d11_;
};

} // namespace

CountFormulaReport verify_count_formulas(const Graph& g, const IntersectionArray& arr,
                                         const Spectrum& s, int index, int x, int y) {
  int d = arr.d();
  if (index != 1 && index != d)
    fail(Errc::PreconditionViolated, "count formulas hold for the extremal eigenvalues");
  auto cls = classify(arr, s);
  if (cls.classification != Classification::Tight)
    fail(Errc::NotTight, "count formulas require a tight array");

  auto part = edge_partition(g, arr, x, y);
  CountFormulaReport rep;
  const Eigenvalue& ev = s.theta(index);
  if (ev.quad) {
    QuadExt one = QuadExt::constant(ev.quad->field(), 1);
    FormulaChecker<QuadExt> checker(g, arr, part, cosine_quad(arr, *ev.quad), one, rep);
    checker.run();
  } else if (ev.value.exact()) {
    FormulaChecker<Rational> checker(g, arr, part, cosine_rational(arr, ev.value.rational()),
                                     Rational(1), rep);
    checker.run();
  } else {
    fail(Errc::PreconditionViolated, "count formulas need an exact extremal eigenvalue");
  }

  if (!rep.ok()) {
    const auto& m = rep.mismatches.front();
    fail(Errc::FormulaMismatch, m.formula + std::string(" at (i=") + std::to_string(m.i) +
                                    ", z=" + std::to_string(m.z) + "): expected " + m.expected +
                                    ", counted " + std::to_string(m.actual));
  }
  return rep;
}

} // namespace drgt
