#pragma once

#include <cmath>
#include <map>

#include "ajf/indices.hpp"

namespace ajf {

/// Sparse real linear combination of basis states, keyed by index triple.
/// Map storage keeps iteration order deterministic.
class StateVector {
 public:
  // Underflow guard only; never used to fake convergence.
  static constexpr double kPruneThreshold = 1e-300;

  StateVector() = default;

  static StateVector basis(const IndexTriple& t) {
    StateVector s;
    s.terms_[t] = 1.0;
    return s;
  }

  void add(const IndexTriple& t, double c) {
    if (c == 0.0) return;
    double& slot = terms_[t];
    slot += c;
    if (std::abs(slot) < kPruneThreshold) terms_.erase(t);
  }

  double coeff(const IndexTriple& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? 0.0 : it->second;
  }

  StateVector& operator*=(double s) {
    if (s == 0.0) {
      terms_.clear();
      return *this;
    }
    for (auto& [t, c] : terms_) c *= s;
    return *this;
  }

  StateVector& axpy(double a, const StateVector& o) {
    for (const auto& [t, c] : o.terms_) add(t, a * c);
    return *this;
  }

  StateVector operator+(const StateVector& o) const {
    StateVector r = *this;
    r.axpy(1.0, o);
    return r;
  }

  StateVector operator-(const StateVector& o) const {
    StateVector r = *this;
    r.axpy(-1.0, o);
    return r;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& [t, c] : terms_) m = std::max(m, std::abs(c));
    return m;
  }

  double dot(const StateVector& o) const {
    double s = 0.0;
    for (const auto& [t, c] : terms_) s += c * o.coeff(t);
    return s;
  }

  double norm() const { return std::sqrt(dot(*this)); }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

 private:
  std::map<IndexTriple, double> terms_;
};

}  // namespace ajf
