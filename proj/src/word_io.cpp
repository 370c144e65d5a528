#include <cctype>
#include <string>

#include "tamex/error.hpp"
#include "tamex/tame_word.hpp"

namespace tamex {

namespace {

class LineParser {
 public:
  LineParser(std::string_view s, std::size_t line, std::size_t n, Field f) : s_(s), line_(line), n_(n), f_(f) {}

  Generator run() {
    skip_ws();
    std::string kw = word();
    if (kw == "aff") return affine();
    if (kw == "elem") return elementary();
    if (kw == "perm") return permutation();
    pos_ = 0;
    fail("unknown generator '" + kw + "'");
  }

  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, pos_ + 1); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string word() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string number_token() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/' ||
                                s_[pos_] == '-' || s_[pos_] == '+' || s_[pos_] == '.'))
      ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  Scalar scalar() {
    std::size_t at = pos_;
    std::string tok = number_token();
    try {
      return Scalar::parse(f_, tok);
    } catch (const ParseError&) {
      throw;
    } catch (const PreconditionError& e) {
      pos_ = at;
      skip_ws();
      fail(e.what());
    }
  }

  std::vector<Scalar> vector() {
    expect('[');
    std::vector<Scalar> v;
    if (accept(']')) return v;
    do {
      v.push_back(scalar());
    } while (accept(','));
    expect(']');
    return v;
  }

  Generator affine() {
    expect('[');
    Matrix a;
    do {
      a.push_back(vector());
    } while (accept(','));
    expect(']');
    std::vector<Scalar> t;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '[')
      t = vector();
    else
      t.assign(n_, Scalar::zero(f_));
    if (a.size() != n_ || t.size() != n_) fail("affine generator must be " + std::to_string(n_) + "-dimensional");
    for (const auto& row : a)
      if (row.size() != n_) fail("affine matrix rows must have " + std::to_string(n_) + " entries");
    if (determinant(a).is_zero()) fail("affine matrix is singular");
    return AffineGen{a, t};
  }

  Generator elementary() {
    skip_ws();
    std::size_t at = pos_;
    std::string idx = number_token();
    std::size_t i = 0;
    try {
      i = std::stoul(idx);
    } catch (...) {
      pos_ = at;
      fail("bad index");
    }
    if (i < 1 || i > n_) {
      pos_ = at;
      fail("index out of range 1.." + std::to_string(n_));
    }
    expect('"');
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != '"') ++pos_;
    if (pos_ >= s_.size()) fail("unterminated polynomial string");
    Polynomial p = parse_polynomial_at(s_.substr(start, pos_ - start), n_, f_, line_, start);
    ++pos_;
    if (p.depends_on(i - 1)) {
      pos_ = start;
      fail("elementary polynomial must not involve x" + std::to_string(i));
    }
    return ElementaryGen{i - 1, p};
  }

  Generator permutation() {
    expect('[');
    Permutation s;
    do {
      skip_ws();
      std::size_t at = pos_;
      std::string tok = number_token();
      std::size_t v = 0;
      try {
        v = std::stoul(tok);
      } catch (...) {
        pos_ = at;
        fail("bad permutation entry");
      }
      if (v < 1 || v > n_) {
        pos_ = at;
        fail("permutation entry out of range");
      }
      s.push_back(v - 1);
    } while (accept(','));
    expect(']');
    if (s.size() != n_ || !is_permutation(s)) fail("not a permutation of 1.." + std::to_string(n_));
    return PermutationGen{s};
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t n_;
  Field f_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  bool in_quote = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_quote = !in_quote;
    if (line[i] == '#' && !in_quote) return line.substr(0, i);
  }
  return line;
}

bool blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<TameWord> parse_word_list(std::string_view text, std::size_t n, Field f, unsigned degree_cap) {
  std::vector<TameWord> words;
  TameWord current = TameWord::identity(n, f, degree_cap);
  bool have_content = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    std::string_view body = strip_comment(line);
    if (trim(body) == "---") {
      words.push_back(current);
      current = TameWord::identity(n, f, degree_cap);
      have_content = false;
      continue;
    }
    if (blank(body)) {
      if (end == text.size()) break;
      continue;
    }
    have_content = true;
    if (trim(body) == "id") {
      if (end == text.size()) break;
      continue;
    }
    LineParser lp(body, line_no, n, f);
    Generator g = lp.run();
    if (!lp.at_end()) throw ParseError("trailing characters after generator", line_no, body.size());
    current = compose(current, TameWord::from_generator(n, f, g, degree_cap));
    if (end == text.size()) break;
  }
  if (have_content || words.empty()) words.push_back(current);
  return words;
}

TameWord parse_word(std::string_view text, std::size_t n, Field f, unsigned degree_cap) {
  auto words = parse_word_list(text, n, f, degree_cap);
  if (words.size() != 1) throw ParseError("expected a single word, found " + std::to_string(words.size()), 1, 1);
  return words.front();
}

}  // namespace tamex
