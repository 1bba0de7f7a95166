#ifndef EMCG_PARSE_HPP
#define EMCG_PARSE_HPP

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "emcg/mcg.hpp"

namespace emcg {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

namespace detail {

class WordParser {
 public:
  WordParser(const SymplecticSpace& space, std::string text, bool permissive)
      : space_(space), text_(std::move(text)), permissive_(permissive) {}

  TwistWord parse() {
    TwistWord w = parse_sequence();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
    return w;
  }

 private:
  TwistWord parse_sequence() {
    TwistWord w(space_);
    for (;;) {
      skip_ws();
      if (pos_ == text_.size() || text_[pos_] == ')') return w;
      TwistWord item = parse_item();
      w = w.concat(item);
    }
  }

  TwistWord parse_item() {
    TwistWord atom(space_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      atom = parse_sequence();
      skip_ws();
      expect(')');
    } else {
      atom.append(parse_curve(), 1);
    }
    long exp = 1;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      exp = parse_int();
    }
    TwistWord out(space_);
    TwistWord block = exp >= 0 ? atom : atom.inverse();
    for (long i = 0; i < (exp >= 0 ? exp : -exp); ++i) out = out.concat(block);
    return out;
  }

  CurveClass parse_curve() {
    char c = text_[pos_];
    if (c == '0') {
      ++pos_;
      return CurveClass(space_, VecZ::Zero(space_.dim()));
    }
    if (c == 'm' || c == 'l') {
      ++pos_;
      long idx = parse_int();
      if (idx < 1 || idx > space_.genus())
        throw ParseError("basis curve index out of range", pos_);
      VecZ v = VecZ::Zero(space_.dim());
      v((c == 'm' ? 0 : space_.genus()) + idx - 1) = 1;
      return CurveClass(space_, v);
    }
    if (c == '[') {
      ++pos_;
      std::vector<long> a = parse_int_list();
      expect(';');
      std::vector<long> b = parse_int_list();
      expect(']');
      if (static_cast<long>(a.size()) != space_.genus() ||
          static_cast<long>(b.size()) != space_.genus())
        throw ParseError("class vector has wrong length", pos_);
      VecZ v(space_.dim());
      for (long i = 0; i < space_.genus(); ++i) {
        v(i) = a[static_cast<std::size_t>(i)];
        v(space_.genus() + i) = b[static_cast<std::size_t>(i)];
      }
      return CurveClass(space_, v, permissive_);
    }
    throw ParseError("expected a curve letter", pos_);
  }

  std::vector<long> parse_int_list() {
    std::vector<long> out;
    out.push_back(parse_int());
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      out.push_back(parse_int());
      skip_ws();
    }
    return out;
  }

  long parse_int() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(text_[start]))))
      throw ParseError("expected an integer", pos_);
    return std::stol(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  SymplecticSpace space_;
  std::string text_;
  bool permissive_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse a twist word: letters m1..mg / l1..lg, `0` for a nullhomologous
/// curve, `[a1,...,ag;b1,...,bg]` for an explicit class, `(...)^k` groups,
/// `^-1` (or any integer exponent) as repetition.
inline TwistWord parse_word(const SymplecticSpace& space, const std::string& text,
                            bool permissive = false) {
  return detail::WordParser(space, text, permissive).parse();
}

/// Canonical textual form: one token per letter.
inline std::string print_word(const TwistWord& w) {
  const SymplecticSpace& sp = w.space();
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) os << ' ';
    first = false;
    const VecZ& v = l.curve.vec();
    bool named = false;
    if (v.isZero()) {
      os << '0';
      named = true;
    } else {
      for (Eigen::Index i = 0; i < sp.dim() && !named; ++i) {
        if (v(i) != 1) continue;
        VecZ e = VecZ::Zero(sp.dim());
        e(i) = 1;
        if (v == e) {
          os << (i < sp.genus() ? 'm' : 'l')
             << (i % sp.genus()) + 1;
          named = true;
        }
      }
    }
    if (!named) {
      os << '[';
      for (Eigen::Index i = 0; i < sp.genus(); ++i)
        os << (i ? "," : "") << v(i).get_str();
      os << ';';
      for (Eigen::Index i = 0; i < sp.genus(); ++i)
        os << (i ? "," : "") << v(sp.genus() + i).get_str();
      os << ']';
    }
    if (l.exponent == -1) os << "^-1";
  }
  return os.str();
}

}  // namespace emcg

#endif  // EMCG_PARSE_HPP
