#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbk {

// Generator symbol classes: Sigma for the classical braid generators
// sigma_i, A/B for the handle loops a_r/b_r, Z for the boundary loops
// z_j, PureA for the pure braid generators A_{i,j}.
enum class GenClass { Sigma, A, B, Z, PureA };

struct GenSym {
  GenClass cls{GenClass::Sigma};
  int i{0};  // index; first index for PureA
  int j{0};  // second index, PureA only (i < j)

  friend bool operator==(const GenSym&, const GenSym&) = default;
  friend auto operator<=>(const GenSym&, const GenSym&) = default;
};

inline GenSym sigma(int i) { return {GenClass::Sigma, i, 0}; }
inline GenSym gen_a(int r) { return {GenClass::A, r, 0}; }
inline GenSym gen_b(int r) { return {GenClass::B, r, 0}; }
inline GenSym gen_z(int j) { return {GenClass::Z, j, 0}; }
inline GenSym pure_a(int i, int j) { return {GenClass::PureA, i, j}; }

// Token spelling used by the word grammar and all JSON output.
std::string symbol_name(const GenSym& g);

struct Letter {
  GenSym sym;
  int sign{+1};  // +1 or -1

  Letter inverse() const { return {sym, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Alphabet = std::vector<GenSym>;

// Freely reduced word; the empty word is the identity. Construction
// reduces, so no Word ever holds an adjacent x x^-1 pair.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> raw);

  static Word single(GenSym g, int sign = +1) { return Word({Letter{g, sign}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  friend Word invert(const Word&);
  friend Word compose(const Word&, const Word&);
  std::vector<Letter> letters_;
};

enum class Side { Right, Left };

Word free_reduce(std::vector<Letter> raw);
Word invert(const Word& w);
Word compose(const Word& u, const Word& v);
// a^b = b^-1 a b (Right), ^b a = b a b^-1 (Left).
Word conjugate(const Word& a, const Word& b, Side side);
// [a, b] = a b a^-1 b^-1.
Word commutator(const Word& a, const Word& b);
Word power(const Word& w, int k);

// Signed letter counts, one slot per alphabet symbol, in alphabet order.
// Throws std::invalid_argument on a letter outside the alphabet.
std::vector<long long> exponent_vector(const Word& w, const Alphabet& alphabet);

bool in_alphabet(const Word& w, const Alphabet& alphabet);

struct ParseError : std::invalid_argument {
  ParseError(std::size_t pos, const std::string& what);
  std::size_t position;
};

// Grammar: whitespace-separated tokens `s<k>` `a<k>` `b<k>` `z<k>`
// `A[<i>,<j>]`, optional exponent suffix `^<int>`, commutator sugar
// `[X,Y]`. Case-sensitive. Empty input parses to the identity.
Word parse_word(const std::string& text, const Alphabet& alphabet);
Word parse_word(const std::string& text);  // no alphabet check

std::string format_word(const Word& w);

}  // namespace sbk

template <>
struct std::hash<sbk::GenSym> {
  std::size_t operator()(const sbk::GenSym& g) const noexcept {
    std::size_t h = static_cast<std::size_t>(g.cls);
    h = h * 1000003u + static_cast<std::size_t>(g.i + 8);
    h = h * 1000003u + static_cast<std::size_t>(g.j + 8);
    return h;
  }
};

template <>
struct std::hash<sbk::Word> {
  std::size_t operator()(const sbk::Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const auto& l : w.letters()) {
      h ^= std::hash<sbk::GenSym>{}(l.sym) + (l.sign > 0 ? 0x9e37u : 0x79b9u);
      h *= 1099511628211ull;
    }
    return h;
  }
};
