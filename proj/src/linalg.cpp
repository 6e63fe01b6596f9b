#include "coxfold/linalg.hpp"

#include <sstream>

namespace coxfold {

Sign uniform_sign(const Vector& x) {
  Sign seen = Sign::zero;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const Sign s = x(i).sign();
    if (s == Sign::zero) continue;
    if (seen == Sign::zero)
      seen = s;
    else if (seen != s)
      return Sign::zero;
  }
  return seen;
}

std::strong_ordering lex_compare(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const auto c = Surd::lex_compare(a(i), b(i));
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Vector& x) {
  std::ostringstream os;
  os << '[';
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (i) os << ", ";
    os << x(i).to_string();
  }
  os << ']';
  return os.str();
}

}  // namespace coxfold
