#include "shamsuddin/textio.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace shamsuddin {

namespace {

constexpr unsigned kMaxExponent = 256;
constexpr int kMaxNesting = 200;
constexpr std::size_t kMaxIndexDigits = 6;

const char* kind_name(TextErrorKind kind) { return kind == TextErrorKind::kSyntax ? "syntax" : "semantic"; }

[[noreturn]] void semantic(std::size_t pos, const std::string& msg) {
  throw TextError(TextErrorKind::kSemantic, pos, msg);
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Reads [begin, end) of a larger text so error positions stay global.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t begin, std::size_t end, bool newline_is_space)
      : text_(text), pos_(begin), end_(end), newline_is_space_(newline_is_space) {}

  void skip_space() {
    while (pos_ < end_) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || (newline_is_space_ && c == '\n')) {
        ++pos_;
      } else {
        break;
      }
    }
  }
  bool at_end() {
    skip_space();
    return pos_ >= end_;
  }
  char peek() {
    skip_space();
    return pos_ < end_ ? text_[pos_] : '\0';
  }
  char peek_raw(std::size_t offset = 0) const { return pos_ + offset < end_ ? text_[pos_ + offset] : '\0'; }
  void advance() { ++pos_; }
  std::size_t pos() const { return pos_; }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const std::string& what) {
    if (!consume(c)) fail("expected " + what);
  }
  void expect_end() {
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
  }

  /// Digit run starting exactly at the cursor (no space skipping).
  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < end_ && is_digit(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  /// 'y' followed by an index, starting at the current (already skipped) position.
  std::size_t y_index() {
    expect('y', "'y'");
    const std::size_t at = pos_;
    const std::string idx = digits();
    if (idx.empty()) fail_at(at, "expected variable index after 'y'");
    if (idx.size() > kMaxIndexDigits) semantic(at, "variable index too large");
    return std::stoul(idx);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    if (pos_ >= end_) fail_at(pos_, msg + ", found end of input");
    fail_at(pos_, msg);
  }
  [[noreturn]] static void fail_at(std::size_t pos, const std::string& msg) {
    throw TextError(TextErrorKind::kSyntax, pos, msg);
  }

 private:
  std::string_view text_;
  std::size_t pos_;
  std::size_t end_;
  bool newline_is_space_;
};

class PolyParser {
 public:
  PolyParser(Cursor& cur, std::size_t arity) : cur_(cur), arity_(arity) {}

  MultiPoly poly() {
    if (++depth_ > kMaxNesting) cur_.fail("nesting too deep");
    MultiPoly acc(arity_);
    if (cur_.peek() == '-' && !is_digit(cur_.peek_raw(1))) {
      cur_.advance();
      acc -= term();
    } else {
      acc = term();
    }
    for (;;) {
      const char c = cur_.peek();
      if (c == '+') {
        cur_.advance();
        acc += term();
      } else if (c == '-') {
        cur_.advance();
        acc -= term();
      } else {
        break;
      }
    }
    --depth_;
    return acc;
  }

 private:
  MultiPoly term() {
    MultiPoly acc = factor();
    while (cur_.consume('*')) acc = acc * factor();
    return acc;
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (cur_.consume('^')) {
      cur_.skip_space();
      const std::size_t at = cur_.pos();
      const std::string e = cur_.digits();
      if (e.empty()) cur_.fail("expected exponent");
      if (e.size() > 4 || std::stoul(e) > kMaxExponent) Cursor::fail_at(at, "exponent too large");
      b = b.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return b;
  }

  MultiPoly base() {
    const char c = cur_.peek();
    if (c == '(') {
      cur_.advance();
      MultiPoly p = poly();
      cur_.expect(')', "')'");
      return p;
    }
    if (c == 'x') {
      cur_.advance();
      return MultiPoly::variable(arity_, 0);
    }
    if (c == 'y') {
      const std::size_t at = cur_.pos();
      const std::size_t idx = cur_.y_index();
      if (idx == 0 || idx > arity_) {
        semantic(at, "unknown variable y" + std::to_string(idx) + " (arity " + std::to_string(arity_) + ")");
      }
      return MultiPoly::variable(arity_, idx);
    }
    if (is_digit(c) || (c == '-' && is_digit(cur_.peek_raw(1)))) return MultiPoly::constant(arity_, rational());
    cur_.fail("expected number, variable or '('");
  }

  Rational rational() {
    const bool negative = cur_.peek_raw() == '-';
    if (negative) cur_.advance();
    mpz_class num(cur_.digits(), 10);
    if (negative) num = -num;
    mpz_class den = 1;
    if (cur_.consume('/')) {
      cur_.skip_space();
      const std::size_t at = cur_.pos();
      const std::string d = cur_.digits();
      if (d.empty()) cur_.fail("expected denominator");
      den = mpz_class(d, 10);
      if (den == 0) Cursor::fail_at(at, "zero denominator");
    }
    return Rational(num, den);
  }

  Cursor& cur_;
  std::size_t arity_;
  int depth_ = 0;
};

struct Segment {
  std::size_t begin;
  std::size_t end;
};

// Non-blank pieces of text between ';' / '\n' separators.
std::vector<Segment> split_entries(std::string_view text) {
  std::vector<Segment> out;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';' || text[i] == '\n') {
      const auto piece = text.substr(begin, i - begin);
      if (piece.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back({begin, i});
      begin = i + 1;
    }
  }
  return out;
}

std::string format_monomial(const Exponent& e) {
  std::string out;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += v == 0 ? std::string("x") : "y" + std::to_string(v);
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

std::string format_term(const Rational& c, const std::string& mono) {
  if (mono.empty()) return c.to_string();
  if (c.is_one()) return mono;
  return c.to_string() + "*" + mono;
}

}  // namespace

TextError::TextError(TextErrorKind kind, std::size_t position, const std::string& message)
    : std::runtime_error(std::string(kind_name(kind)) + " error at position " + std::to_string(position) + ": " +
                         message),
      kind_(kind),
      position_(position),
      message_(message) {}

MultiPoly parse_poly(std::string_view text, std::size_t arity) {
  Cursor cur(text, 0, text.size(), true);
  PolyParser parser(cur, arity);
  MultiPoly p = parser.poly();
  cur.expect_end();
  return p;
}

std::string format_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const std::string mono = format_monomial(e);
    if (first) {
      out += format_term(c, mono);
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      out += format_term(c.abs(), mono);
    }
  }
  return out;
}

std::string format_unipoly(const UniPoly& p) { return format_poly(MultiPoly::from_uni(0, p)); }

ParsedDerivation parse_derivation(std::string_view text) {
  const std::vector<Segment> segments = split_entries(text);

  // Pass 1: headers only, to learn the arity.
  std::vector<std::size_t> index_of(segments.size());
  std::set<std::size_t> seen;
  std::size_t n = 0;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    Cursor cur(text, segments[s].begin, segments[s].end, false);
    cur.skip_space();
    const std::size_t at = cur.pos();
    const std::size_t idx = cur.y_index();
    cur.expect(':', "':'");
    if (idx == 0) semantic(at, "variables are numbered from y1");
    if (!seen.insert(idx).second) semantic(at, "duplicate entry for y" + std::to_string(idx));
    index_of[s] = idx;
    n = std::max(n, idx);
  }
  for (std::size_t j = 1; j <= n; ++j) {
    if (!seen.contains(j)) semantic(text.size(), "missing entry for y" + std::to_string(j));
  }

  std::vector<std::optional<VariableCoefficients>> coeffs(n);
  bool shamsuddin = true;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    Cursor cur(text, segments[s].begin, segments[s].end, false);
    cur.skip_space();
    cur.y_index();
    cur.expect(':', "':'");
    cur.expect('a', "'a'");
    cur.expect('=', "'='");
    cur.skip_space();
    const std::size_t a_at = cur.pos();
    MultiPoly a = PolyParser(cur, n).poly();
    cur.expect(',', "','");
    cur.expect('b', "'b'");
    cur.expect('=', "'='");
    cur.skip_space();
    const std::size_t b_at = cur.pos();
    MultiPoly b = PolyParser(cur, n).poly();
    cur.expect_end();

    const std::size_t j = index_of[s];
    auto a_uni = a.as_univariate();
    if (!a_uni) semantic(a_at, "a for y" + std::to_string(j) + " must be a polynomial in x");
    for (std::size_t k = j; k <= n; ++k) {
      if (b.depends_on(k)) {
        semantic(b_at, "non-triangular dependency: b for y" + std::to_string(j) + " involves y" + std::to_string(k));
      }
    }
    shamsuddin = shamsuddin && b.as_univariate().has_value();
    coeffs[j - 1] = VariableCoefficients{std::move(*a_uni), std::move(b)};
  }

  std::vector<VariableCoefficients> raw;
  raw.reserve(n);
  for (auto& c : coeffs) raw.push_back(std::move(*c));
  if (shamsuddin) return normalize(raw);
  return TriangularDerivation(std::move(raw));
}

namespace {

template <typename AOf, typename BFormatter>
std::string format_entries(std::size_t n, AOf a_of, BFormatter b_of) {
  std::string out;
  for (std::size_t j = 1; j <= n; ++j) {
    if (j > 1) out += " ; ";
    out += "y" + std::to_string(j) + ": a=" + format_unipoly(a_of(j)) + ", b=" + b_of(j);
  }
  return out;
}

}  // namespace

std::string format_derivation(const Derivation& d) {
  return format_entries(
      d.arity(), [&](std::size_t j) -> const UniPoly& { return d.a_of(j); },
      [&](std::size_t j) { return format_unipoly(d.b_of(j)); });
}

std::string format_derivation(const TriangularDerivation& d) {
  return format_entries(
      d.arity(), [&](std::size_t j) -> const UniPoly& { return d.coefficients()[j - 1].a; },
      [&](std::size_t j) { return format_poly(d.coefficients()[j - 1].b); });
}

PolyEndo parse_endo(std::string_view text, std::size_t arity) {
  std::vector<std::optional<MultiPoly>> images(arity + 1);
  for (const Segment& seg : split_entries(text)) {
    Cursor cur(text, seg.begin, seg.end, false);
    cur.skip_space();
    const std::size_t at = cur.pos();
    std::size_t var = 0;
    if (cur.peek() == 'x') {
      cur.advance();
    } else if (cur.peek() == 'y') {
      var = cur.y_index();
      if (var == 0 || var > arity) semantic(at, "unknown variable y" + std::to_string(var));
    } else {
      cur.fail("expected 'x' or 'y<i>'");
    }
    cur.expect('-', "'->'");
    if (cur.peek_raw() != '>') cur.fail("expected '->'");
    cur.advance();
    MultiPoly image = PolyParser(cur, arity).poly();
    cur.expect_end();
    if (images[var]) semantic(at, "duplicate image for " + (var == 0 ? std::string("x") : "y" + std::to_string(var)));
    images[var] = std::move(image);
  }
  for (std::size_t v = 0; v <= arity; ++v) {
    if (!images[v]) {
      semantic(text.size(), "missing image for " + (v == 0 ? std::string("x") : "y" + std::to_string(v)));
    }
  }
  std::vector<MultiPoly> ys;
  for (std::size_t v = 1; v <= arity; ++v) ys.push_back(std::move(*images[v]));
  return PolyEndo(std::move(*images[0]), std::move(ys));
}

std::string format_endo(const PolyEndo& rho) {
  std::string out = "x -> " + format_poly(rho.x_image());
  for (std::size_t j = 1; j <= rho.arity(); ++j) out += " ; y" + std::to_string(j) + " -> " + format_poly(rho.image(j));
  return out;
}

}  // namespace shamsuddin
