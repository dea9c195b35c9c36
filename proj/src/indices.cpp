#include "ajf/indices.hpp"

#include <stdexcept>

namespace ajf {

ValidationReport validate(const IndexTriple& t) {
  ValidationReport r;
  auto flag = [&r](const std::string& msg) {
    r.valid = false;
    r.violations.push_back(msg);
  };

  if (t.l.twice < 0) flag("2l must be a nonnegative integer, got 2l = " + std::to_string(t.l.twice));
  const HalfInt lm = t.l - t.m;
  const HalfInt lq = t.l - t.q;
  if (!lm.is_integer()) flag("l - m must be an integer, got " + to_string(lm));
  if (!lq.is_integer()) flag("l - q must be an integer, got " + to_string(lq));
  if (abs(t.m) > t.l) flag("|m| <= l violated: m = " + to_string(t.m) + ", l = " + to_string(t.l));
  if (abs(t.q) > t.l) flag("|q| <= l violated: q = " + to_string(t.q) + ", l = " + to_string(t.l));
  return r;
}

bool is_valid(const IndexTriple& t) { return validate(t).valid; }

void require_valid(const IndexTriple& t) {
  ValidationReport r = validate(t);
  if (r.valid) return;
  std::string msg = "invalid index triple " + to_string(t) + ":";
  for (const auto& v : r.violations) msg += " " + v + ";";
  throw std::domain_error(msg);
}

ClassicalIndex to_classical(const IndexTriple& t) {
  require_valid(t);
  return ClassicalIndex{(t.l - t.m).to_int(), (t.m + t.q).to_int(), (t.m - t.q).to_int()};
}

IndexTriple from_classical(const ClassicalIndex& c) {
  if (c.n < 0) throw std::domain_error("from_classical: degree n must be nonnegative");
  IndexTriple t{HalfInt::from_twice(2 * c.n + c.alpha + c.beta),
                HalfInt::from_twice(c.alpha + c.beta),
                HalfInt::from_twice(c.alpha - c.beta)};
  require_valid(t);
  return t;
}

std::vector<IndexTriple> enumerate_multiplet(HalfInt l) {
  if (l.twice < 0) throw std::domain_error("enumerate_multiplet: 2l must be nonnegative");
  std::vector<IndexTriple> out;
  out.reserve(static_cast<std::size_t>(l.twice + 1) * static_cast<std::size_t>(l.twice + 1));
  for (int m2 = -l.twice; m2 <= l.twice; m2 += 2)
    for (int q2 = -l.twice; q2 <= l.twice; q2 += 2)
      out.push_back(IndexTriple{l, HalfInt::from_twice(m2), HalfInt::from_twice(q2)});
  return out;
}

std::vector<IndexTriple> enumerate_states(HalfInt l_max) {
  std::vector<IndexTriple> out;
  for (int l2 = 0; l2 <= l_max.twice; ++l2) {
    auto shell = enumerate_multiplet(HalfInt::from_twice(l2));
    out.insert(out.end(), shell.begin(), shell.end());
  }
  return out;
}

std::string to_string(const IndexTriple& t) {
  return "(" + to_string(t.l) + ", " + to_string(t.m) + ", " + to_string(t.q) + ")";
}

std::string to_string(const ClassicalIndex& c) {
  return "(n=" + std::to_string(c.n) + ", alpha=" + std::to_string(c.alpha) +
         ", beta=" + std::to_string(c.beta) + ")";
}

}  // namespace ajf
