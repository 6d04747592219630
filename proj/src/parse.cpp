#include "gda/parse.hpp"

#include <cctype>

#include "gda/catalog.hpp"

namespace gda {

namespace {

class Parser {
 public:
  Parser(const std::string& text, std::vector<std::string>* warnings) : s_(text), warnings_(warnings) {}

  FactorList expr() {
    FactorList out;
    skip();
    if (pos_ >= s_.size()) fail("empty expression");
    while (true) {
      factor(out);
      skip();
      if (pos_ >= s_.size()) break;
      expect('*');
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string ident() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a factor");
    return s_.substr(start, pos_ - start);
  }

  int integer() {
    skip();
    size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    int64_t v = 0;
    size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (int64_t{1} << 30)) fail("integer too large");
      ++pos_;
    }
    if (digits == pos_) {
      pos_ = start;
      fail("expected an integer");
    }
    return static_cast<int>(neg ? -v : v);
  }

  int sign() {
    skip();
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) return s_[pos_++] == '+' ? 1 : -1;
    fail("expected '+' or '-'");
  }

  std::vector<int> group() {
    std::vector<int> orders;
    while (true) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] != 'Z') fail("expected a cyclic factor 'Z<n>'");
      ++pos_;
      size_t at = pos_;
      int n = integer();
      if (n < 1) {
        pos_ = at;
        fail("cyclic order must be >= 1");
      }
      orders.push_back(n);
      skip();
      if (pos_ < s_.size() && s_[pos_] == 'x') {
        ++pos_;
        continue;
      }
      return orders;
    }
  }

  void check_two_power(int n, const std::string& what, size_t at) {
    if (n < 2 || !is_power_of_two(n)) {
      throw ParseError(what + ": " + std::to_string(n) + " is not a power of 2", at);
    }
  }

  void factor(FactorList& out) {
    size_t start = (skip(), pos_);
    std::string id = ident();
    if (id == "C" && peek('(')) {
      expect('(');
      size_t at = (skip(), pos_);
      int m = integer();
      expect(';');
      int eta = sign();
      expect(')');
      if (m < 2) throw ParseError("C: order " + std::to_string(m) + " must be >= 2", at);
      if (m % 2 == 1 && eta < 0) {
        if (warnings_) warnings_->push_back("C(" + std::to_string(m) + ";-) has odd order; normalized to C(" +
                                            std::to_string(m) + ";+)");
        eta = 1;
      }
      out.push_back(factor_c(m, eta));
    } else if (id == "D" && peek('(')) {
      expect('(');
      size_t at = (skip(), pos_);
      int k = integer();
      expect(',');
      int l = integer();
      expect(';');
      int mu = sign();
      expect(',');
      int nu = sign();
      expect(')');
      check_two_power(k, "D", at);
      check_two_power(l, "D", at);
      out.push_back(factor_d(k, l, mu, nu));
    } else if (id == "E" && peek('(')) {
      expect('(');
      size_t at = (skip(), pos_);
      int n = integer();
      expect(';');
      int eps = sign();
      expect(')');
      check_two_power(n, "E", at);
      out.push_back(factor_e(n, eps));
    } else if ((id == "R" || id == "CG") && peek('[')) {
      expect('[');
      std::vector<int> g = group();
      expect(']');
      out.push_back(id == "R" ? factor_rg(g) : factor_cg(g));
    } else if (id == "Pauli" && peek('(')) {
      expect('(');
      std::vector<int> g = group();
      expect(';');
      std::vector<std::vector<int>> rows(1);
      while (true) {
        rows.back().push_back(integer());
        skip();
        if (peek(',')) {
          expect(',');
        } else if (peek(';')) {
          expect(';');
          rows.emplace_back();
        } else {
          break;
        }
      }
      expect(')');
      Factor f = factor_pauli(g, rows);
      try {
        factor_presentation(f);
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("Pauli: ") + e.what(), start);
      }
      out.push_back(f);
    } else if (id == "H") {
      out.push_back(factor_h());
    } else {
      expand_name(id, start, out);
    }
  }

  void expand_name(const std::string& id, size_t at, FactorList& out) {
    if (id == "C2") out.push_back(factor_c(2, -1));
    else if (id == "H2") out.push_back(factor_e(2, -1));
    else if (id == "H4") out.push_back(factor_d(2, 2, -1, -1));
    else if (id == "M2_2") out.push_back(factor_e(2, 1));
    else if (id == "M2_4") out.push_back(factor_d(2, 2, 1, 1));
    else if (id == "M2_8") out.push_back(factor_d(2, 4, -1, -1));
    else if (id == "M2C_Z4") out.push_back(factor_e(4, -1));
    else if (id == "M4_4") {
      out.push_back(factor_h());
      out.push_back(factor_d(2, 2, -1, -1));
    } else {
      throw ParseError("unknown factor '" + id + "'", at);
    }
  }

  const std::string& s_;
  std::vector<std::string>* warnings_;
  size_t pos_ = 0;
};

}  // namespace

FactorList parse_expr(const std::string& text, std::vector<std::string>* warnings) {
  return Parser(text, warnings).expr();
}

}  // namespace gda
