#include "oexp/rational.hpp"

#include <cctype>

#include "oexp/error.hpp"

namespace oexp {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  std::size_t slash = text.find('/');
  auto check_int = [&](const std::string& part, const char* what) {
    if (part.empty()) throw InputError(std::string("missing ") + what + " in rational '" + text + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw InputError("malformed rational '" + text + "'");
    for (std::size_t k = start; k < part.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(part[k])))
        throw InputError("malformed rational '" + text + "'");
  };
  Rational q;
  if (slash == std::string::npos) {
    check_int(text, "numerator");
    q = Rational(text);
  } else {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    check_int(num, "numerator");
    check_int(den, "denominator");
    if (Rational(den) == 0) throw InputError("zero denominator in rational '" + text + "'");
    q = Rational(text);
  }
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) throw ValidationError("division by zero");
  Rational n(b.re_ * b.re_ + b.im_ * b.im_);
  return {Rational((a.re_ * b.re_ + a.im_ * b.im_) / n),
          Rational((a.im_ * b.re_ - a.re_ * b.im_) / n)};
}

namespace {
std::string rat_display(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}
}  // namespace

std::string GaussianRational::str() const {
  if (im_ == 0) return rat_display(re_);
  std::string im_part;
  if (im_ == 1) im_part = "i";
  else if (im_ == -1) im_part = "-i";
  else im_part = rat_display(im_) + "i";
  if (re_ == 0) return im_part;
  if (im_ > 0) return rat_display(re_) + "+" + im_part;
  return rat_display(re_) + im_part;
}

}  // namespace oexp
