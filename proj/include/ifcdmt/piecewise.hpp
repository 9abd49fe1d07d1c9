#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "ifcdmt/scalar.hpp"

namespace ifcdmt {

/// Affine form a + b*t.
struct Affine {
  double a = 0.0, b = 0.0;
  [[nodiscard]] double eval(double t) const { return a + b * t; }
};

/// A piecewise-linear function of one variable, closed under +, scaling by a
/// constant, [.]^+, min and max of affine leaves. The object carries a
/// superset of the affine pieces the function can realize; every breakpoint
/// of the function is a crossing of two such pieces, so exact extrema over an
/// interval reduce to evaluating at pairwise crossings plus the endpoints.
/// No iterative optimizer is involved anywhere.
class Piecewise {
 public:
  static Piecewise affine(double a, double b) {
    Piecewise p;
    p.eval_ = [a, b](double t) { return a + b * t; };
    p.pieces_ = {{a, b}};
    return p;
  }

  static Piecewise constant(double c) { return affine(c, 0.0); }

  friend Piecewise operator+(const Piecewise& f, const Piecewise& g) {
    Piecewise p;
    p.eval_ = [fe = f.eval_, ge = g.eval_](double t) { return fe(t) + ge(t); };
    p.pieces_.reserve(f.pieces_.size() * g.pieces_.size());
    for (const Affine& u : f.pieces_)
      for (const Affine& v : g.pieces_) p.pieces_.push_back({u.a + v.a, u.b + v.b});
    p.dedup();
    return p;
  }

  friend Piecewise operator*(const Piecewise& f, double s) {
    Piecewise p;
    p.eval_ = [fe = f.eval_, s](double t) { return s * fe(t); };
    for (const Affine& u : f.pieces_) p.pieces_.push_back({s * u.a, s * u.b});
    p.dedup();
    return p;
  }

  friend Piecewise pw_min(const Piecewise& f, const Piecewise& g) {
    return combine(f, g, [](double u, double v) { return std::min(u, v); });
  }

  friend Piecewise pw_max(const Piecewise& f, const Piecewise& g) {
    return combine(f, g, [](double u, double v) { return std::max(u, v); });
  }

  /// [f]^+ = max(f, 0).
  friend Piecewise pw_pos(const Piecewise& f) { return pw_max(f, constant(0.0)); }

  [[nodiscard]] double operator()(double t) const { return eval_(t); }

  struct Extremum {
    double arg = 0.0;
    double value = 0.0;
  };

  /// Exact minimum over [lo, hi]; on ties returns the smallest argument.
  [[nodiscard]] Extremum minimize(double lo, double hi) const {
    return scan(lo, hi, /*want_min=*/true);
  }

  /// Exact maximum over [lo, hi]; on ties returns the smallest argument.
  [[nodiscard]] Extremum maximize(double lo, double hi) const {
    return scan(lo, hi, /*want_min=*/false);
  }

 private:
  template <typename Op>
  static Piecewise combine(const Piecewise& f, const Piecewise& g, Op op) {
    Piecewise p;
    p.eval_ = [fe = f.eval_, ge = g.eval_, op](double t) { return op(fe(t), ge(t)); };
    p.pieces_ = f.pieces_;
    p.pieces_.insert(p.pieces_.end(), g.pieces_.begin(), g.pieces_.end());
    p.dedup();
    return p;
  }

  void dedup() {
    std::sort(pieces_.begin(), pieces_.end(), [](const Affine& u, const Affine& v) {
      return u.a != v.a ? u.a < v.a : u.b < v.b;
    });
    pieces_.erase(std::unique(pieces_.begin(), pieces_.end(),
                              [](const Affine& u, const Affine& v) {
                                return u.a == v.a && u.b == v.b;
                              }),
                  pieces_.end());
  }

  [[nodiscard]] Extremum scan(double lo, double hi, bool want_min) const {
    std::vector<double> cand;
    cand.reserve(pieces_.size() * pieces_.size() / 2 + 2);
    cand.push_back(lo);
    cand.push_back(hi);
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      for (std::size_t j = i + 1; j < pieces_.size(); ++j) {
        const double db = pieces_[i].b - pieces_[j].b;
        if (db == 0.0) continue;
        const double t = (pieces_[j].a - pieces_[i].a) / db;
        if (t > lo && t < hi) cand.push_back(t);
      }
    }
    std::sort(cand.begin(), cand.end());
    Extremum best{cand.front(), eval_(cand.front())};
    for (double t : cand) {
      const double v = eval_(t);
      if ((want_min && v < best.value) || (!want_min && v > best.value)) best = {t, v};
    }
    return best;
  }

  std::function<double(double)> eval_;
  std::vector<Affine> pieces_;
};

}  // namespace ifcdmt
