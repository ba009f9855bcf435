#include "pact/scalar.hpp"

#include "pact/errors.hpp"

namespace pact {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
{
  re_.canonicalize();
  im_.canonicalize();
}

Scalar& Scalar::operator+=(const Scalar& o)
{
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string Scalar::to_string() const
{
  std::string out = re_.get_str();
  if (sgn(im_) < 0)
    out += "-" + mpq_class(-im_).get_str();
  else
    out += "+" + im_.get_str();
  return out + " i";
}

namespace {

mpq_class parse_rational(std::string_view s, std::string_view whole)
{
  if (s.empty())
    throw ParseError("empty rational in scalar '" + std::string(whole) + "'");
  mpq_class q;
  if (q.set_str(std::string(s), 10) != 0)
    throw ParseError("bad rational '" + std::string(s) + "' in scalar '" + std::string(whole) + "'");
  if (q.get_den() == 0)
    throw ParseError("zero denominator in scalar '" + std::string(whole) + "'");
  q.canonicalize();
  return q;
}

} // namespace

Scalar Scalar::parse(std::string_view text)
{
  std::string s;
  for (char c : text)
    if (c != ' ')
      s.push_back(c);
  if (s.empty() || s.back() != 'i')
    return Scalar(parse_rational(s, text));
  s.pop_back();
  // The separator is the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos)
    return Scalar(0, parse_rational(s, text));
  mpq_class re = parse_rational(std::string_view(s).substr(0, split), text);
  std::string im_text = s.substr(split);
  if (im_text.front() == '+')
    im_text.erase(0, 1);
  return Scalar(re, parse_rational(im_text, text));
}

} // namespace pact
