#include "sbk/word.hpp"

#include <cctype>
#include <sstream>
#include <unordered_set>

namespace sbk {

std::string symbol_name(const GenSym& g) {
  std::ostringstream os;
  switch (g.cls) {
    case GenClass::Sigma: os << 's' << g.i; break;
    case GenClass::A: os << 'a' << g.i; break;
    case GenClass::B: os << 'b' << g.i; break;
    case GenClass::Z: os << 'z' << g.i; break;
    case GenClass::PureA: os << "A[" << g.i << ',' << g.j << ']'; break;
  }
  return os.str();
}

Word::Word(std::vector<Letter> raw) : letters_(free_reduce(std::move(raw)).letters_) {}

Word free_reduce(std::vector<Letter> raw) {
  Word out;
  auto& st = out.letters_;
  st.reserve(raw.size());
  for (const auto& l : raw) {
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +-1");
    if (!st.empty() && st.back().sym == l.sym && st.back().sign == -l.sign) {
      st.pop_back();
    } else {
      st.push_back(l);
    }
  }
  return out;
}

Word invert(const Word& w) {
  Word out;
  out.letters_.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.letters_.push_back(it->inverse());
  }
  return out;
}

Word compose(const Word& u, const Word& v) {
  Word out;
  out.letters_ = u.letters();
  auto& st = out.letters_;
  st.reserve(u.size() + v.size());
  for (const auto& l : v.letters()) {
    if (!st.empty() && st.back().sym == l.sym && st.back().sign == -l.sign) {
      st.pop_back();
    } else {
      st.push_back(l);
    }
  }
  return out;
}

Word conjugate(const Word& a, const Word& b, Side side) {
  if (side == Side::Right) return compose(compose(invert(b), a), b);
  return compose(compose(b, a), invert(b));
}

Word commutator(const Word& a, const Word& b) {
  return compose(compose(a, b), compose(invert(a), invert(b)));
}

Word power(const Word& w, int k) {
  Word base = k < 0 ? invert(w) : w;
  Word out;
  for (int t = 0; t < (k < 0 ? -k : k); ++t) out = compose(out, base);
  return out;
}

std::vector<long long> exponent_vector(const Word& w, const Alphabet& alphabet) {
  std::vector<long long> v(alphabet.size(), 0);
  for (const auto& l : w.letters()) {
    bool found = false;
    for (std::size_t k = 0; k < alphabet.size(); ++k) {
      if (alphabet[k] == l.sym) {
        v[k] += l.sign;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("exponent_vector: symbol " + symbol_name(l.sym) +
                                  " not in alphabet");
    }
  }
  return v;
}

bool in_alphabet(const Word& w, const Alphabet& alphabet) {
  std::unordered_set<GenSym> set(alphabet.begin(), alphabet.end());
  for (const auto& l : w.letters()) {
    if (!set.count(l.sym)) return false;
  }
  return true;
}

ParseError::ParseError(std::size_t pos, const std::string& what)
    : std::invalid_argument("parse error at " + std::to_string(pos) + ": " + what),
      position(pos) {}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Alphabet* alphabet)
      : text_(text), alphabet_(alphabet) {}

  Word parse() {
    Word w = sequence();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected character");
    return w;
  }

 private:
  // sequence := term*, stops at ',' or ']' so commutator arms can recurse
  Word sequence() {
    std::vector<Letter> acc;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] == ',' || text_[pos_] == ']') break;
      Word t = term();
      for (const auto& l : t.letters()) acc.push_back(l);
    }
    return Word(std::move(acc));
  }

  // term := atom ('^' int)?
  Word term() {
    Word a = atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      long long e = integer();
      if (e > 64 || e < -64) throw ParseError(pos_, "exponent out of range");
      return power(a, static_cast<int>(e));
    }
    return a;
  }

  // atom := generator | '[' sequence ',' sequence ']'
  Word atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "expected generator");
    char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      Word x = sequence();
      expect(',');
      Word y = sequence();
      expect(']');
      return commutator(x, y);
    }
    return Word::single(generator());
  }

  GenSym generator() {
    std::size_t start = pos_;
    char c = text_[pos_];
    if (c == 'A') {
      ++pos_;
      expect('[');
      long long i = integer();
      expect(',');
      long long j = integer();
      expect(']');
      if (i <= 0 || j <= 0 || i >= j) throw ParseError(start, "A[i,j] needs 0 < i < j");
      return pure_a(static_cast<int>(i), static_cast<int>(j));
    }
    GenClass cls;
    switch (c) {
      case 's': cls = GenClass::Sigma; break;
      case 'a': cls = GenClass::A; break;
      case 'b': cls = GenClass::B; break;
      case 'z': cls = GenClass::Z; break;
      default: throw ParseError(pos_, std::string("unknown symbol '") + c + "'");
    }
    ++pos_;
    long long k = integer();
    if (k <= 0) throw ParseError(start, "generator index must be positive");
    GenSym g{cls, static_cast<int>(k), 0};
    check_alphabet(g, start);
    return g;
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError(start, "expected integer");
    }
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) throw ParseError(start, "integer too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  void check_alphabet(const GenSym& g, std::size_t at) {
    if (!alphabet_) return;
    for (const auto& s : *alphabet_) {
      if (s == g) return;
    }
    throw ParseError(at, "symbol " + symbol_name(g) + " not in alphabet");
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(pos_, std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  const std::string& text_;
  const Alphabet* alphabet_;
  std::size_t pos_{0};
};

}  // namespace

Word parse_word(const std::string& text, const Alphabet& alphabet) {
  Parser p(text, &alphabet);
  Word w = p.parse();
  // PureA indices are validated here rather than in generator(), so the
  // alphabet decides which (i,j) pairs exist.
  if (!in_alphabet(w, alphabet)) throw ParseError(0, "word leaves the alphabet");
  return w;
}

Word parse_word(const std::string& text) {
  Parser p(text, nullptr);
  return p.parse();
}

std::string format_word(const Word& w) {
  std::ostringstream os;
  std::size_t k = 0;
  const auto& ls = w.letters();
  bool first = true;
  while (k < ls.size()) {
    std::size_t run = k;
    while (run < ls.size() && ls[run] == ls[k]) ++run;
    long long e = static_cast<long long>(run - k) * ls[k].sign;
    if (!first) os << ' ';
    first = false;
    os << symbol_name(ls[k].sym);
    if (e != 1) os << '^' << e;
    k = run;
  }
  return os.str();
}

}  // namespace sbk
