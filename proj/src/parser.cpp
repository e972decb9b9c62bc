#include "domination/parser.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <string>

#include "domination/errors.hpp"

namespace domination {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool peek_is(std::string_view token) {
    skip_space();
    return text_.substr(pos_, token.size()) == token;
  }

  bool accept(std::string_view token) {
    if (!peek_is(token)) return false;
    for (std::size_t i = 0; i < token.size(); ++i) advance();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::int64_t integer(std::string_view what) {
    skip_space();
    const std::size_t line = line_, column = column_;
    const std::size_t start = pos_;
    std::size_t end = pos_;
    if (end < text_.size() && text_[end] == '-') ++end;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + end, value);
    if (ec == std::errc::result_out_of_range) throw ParseError(std::string(what) + " is out of range", line, column);
    if (ec != std::errc() || ptr != text_.data() + end) {
      throw ParseError("expected an integer for " + std::string(what), line, column);
    }
    while (pos_ < end) advance();
    return value;
  }

  [[noreturn]] void fail(const std::string& message) {
    skip_space();
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError(message + ", found " + found, line_, column_);
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

SeifertData parse_sfs(Cursor& in) {
  SeifertData s;
  if (in.peek_is("n") || in.peek_is("o")) {
    in.fail("non-orientable base orbifolds are not supported; only 'g=' bases");
  }
  in.expect("g");
  in.expect("=");
  {
    const std::size_t line = in.line(), column = in.column();
    s.genus = in.integer("genus");
    if (s.genus < 0) {
      throw ParseError("genus must be non-negative (non-orientable bases are not supported)", line, column);
    }
  }
  in.expect(";");
  in.expect("b");
  in.expect("=");
  s.obstruction = in.integer("b");
  if (in.accept(";")) {
    do {
      in.skip_space();
      const std::size_t line = in.line(), column = in.column();
      in.expect("(");
      ExceptionalFiber f;
      f.alpha = in.integer("alpha");
      in.expect(",");
      f.beta = in.integer("beta");
      in.expect(")");
      if (f.alpha < 2) throw ParseError("exceptional fibre needs alpha >= 2", line, column);
      if (f.beta % f.alpha != 0 && std::gcd(f.alpha, f.beta) != 1) {
        throw ParseError("exceptional fibre (" + std::to_string(f.alpha) + "," + std::to_string(f.beta) +
                             ") is not coprime",
                         line, column);
      }
      s.fibers.push_back(f);
    } while (in.accept(","));
  }
  in.expect(")");
  return s;
}

PrimePiece parse_piece(Cursor& in) {
  in.skip_space();
  if (in.accept("SFS")) {
    in.expect("(");
    return parse_sfs(in);
  }
  if (in.peek_is("Spherical")) {
    const std::size_t line = in.line(), column = in.column();
    in.expect("Spherical");
    in.expect("(");
    const std::int64_t order = in.integer("order");
    in.expect(")");
    if (order < 2) {
      throw ParseError("Spherical order must be at least 2 (S3 is the empty connected sum)", line, column);
    }
    return SphericalPiece{order};
  }
  if (in.accept("S2xS1")) return S2xS1Piece{};
  if (in.accept("Hyperbolic")) return HyperbolicPiece{};
  if (in.accept("OtherAspherical")) return OtherAsphericalPiece{};
  if (in.accept("Sol")) return SolPiece{};
  in.fail("expected a prime piece (SFS, Spherical, S2xS1, Hyperbolic, Sol, OtherAspherical)");
}

}  // namespace

Manifold parse_manifold(std::string_view text) {
  Cursor in(text);
  if (in.at_end()) in.fail("empty description");
  std::vector<PrimePiece> pieces;
  if (in.accept("S3")) {
    if (!in.at_end()) in.fail("S3 must be the whole description");
    return Manifold{};
  }
  do {
    pieces.push_back(parse_piece(in));
  } while (in.accept("#"));
  if (!in.at_end()) in.fail("expected '#' or end of input");
  return Manifold(std::move(pieces));
}

}  // namespace domination
