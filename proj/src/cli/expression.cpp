#include "kolchin/parse.hpp"

#include <cctype>

namespace kolchin {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const DerivationBasis& basis)
      : text_(text), basis_(basis) {}

  DiffPolynomial parse() {
    DiffPolynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("expected operator or end of input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column),
                     line, column);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  DiffPolynomial expr() {
    DiffPolynomial acc = term();
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  DiffPolynomial term() {
    DiffPolynomial acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        DiffPolynomial d = unary();
        if (!d.is_constant()) {
          pos_ = at;
          fail("division by a non-scalar");
        }
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc = acc.scaled(d.constant_value().inverse());
      } else {
        return acc;
      }
    }
  }

  DiffPolynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  unsigned integer_exponent() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  DiffPolynomial power() {
    DiffPolynomial base = atom();
    if (accept('^')) return base.pow(integer_exponent());
    return base;
  }

  DiffPolynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      DiffPolynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return DiffPolynomial(Scalar(mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return name();
    fail(std::string("unexpected character '") + c + "'");
  }

  DiffPolynomial name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string id(text_.substr(start, pos_ - start));
    if (const int g = basis_.transcendental_index(id); g >= 0) {
      if (pos_ < text_.size() && (text_[pos_] == '\'' || text_[pos_] == '_')) {
        fail("derivatives of base-field generators are not expressions; use the derivative table");
      }
      return DiffPolynomial(Scalar::generator(g));
    }
    const int y = basis_.indeterminate_index(id);
    if (y < 0) {
      pos_ = start;
      fail("undeclared name '" + id + "'");
    }
    DerivativeOperator op;
    if (pos_ < text_.size() && text_[pos_] == '\'') {
      if (!basis_.is_ordinary()) fail("apostrophe derivatives need a single derivation");
      int k = 0;
      while (pos_ < text_.size() && text_[pos_] == '\'') {
        ++pos_;
        ++k;
      }
      op = DerivativeOperator::from_exponents({k});
    } else if (pos_ + 1 < text_.size() && text_[pos_] == '^' && text_[pos_ + 1] == '(') {
      if (!basis_.is_ordinary()) fail("y^(k) derivatives need a single derivation");
      pos_ += 2;
      const unsigned k = integer_exponent();
      if (!accept(')')) fail("expected ')'");
      if (k > 255) fail("derivative order too large");
      op = DerivativeOperator::from_exponents({static_cast<int>(k)});
    } else if (pos_ < text_.size() && text_[pos_] == '_') {
      ++pos_;
      op = derivation_word();
    }
    return DiffPolynomial::variable(DiffVariable(y, op));
  }

  // Greedy longest match of derivation names.
  DerivativeOperator derivation_word() {
    std::vector<int> exps(static_cast<std::size_t>(basis_.derivation_count()), 0);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      int best = -1;
      std::size_t best_len = 0;
      for (int d = 0; d < basis_.derivation_count(); ++d) {
        const auto& n = basis_.derivations()[static_cast<std::size_t>(d)];
        if (n.size() > best_len && text_.substr(pos_, n.size()) == n) {
          best = d;
          best_len = n.size();
        }
      }
      if (best < 0) fail("expected a derivation name");
      pos_ += best_len;
      if (++exps[static_cast<std::size_t>(best)] > 255) fail("derivative order too large");
    }
    if (pos_ == start) fail("expected a derivation name");
    return DerivativeOperator::from_exponents(exps);
  }

  std::string_view text_;
  const DerivationBasis& basis_;
  std::size_t pos_ = 0;
};

}  // namespace

DiffPolynomial parse_polynomial(std::string_view text, const DerivationBasis& basis) {
  return ExpressionParser(text, basis).parse();
}

Scalar parse_scalar(std::string_view text, const DerivationBasis& basis) {
  DiffPolynomial p = parse_polynomial(text, basis);
  if (!p.is_constant()) throw ParseError("expected a base-field element", 1, 1);
  return p.constant_value();
}

}  // namespace kolchin
