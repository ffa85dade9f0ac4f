#include "qweyl/freealg.hpp"

#include <algorithm>

namespace qweyl {

Word Word::parse(std::string_view text) {
  for (char c : text)
    if (c != 'x' && c != 'y') throw ParseError("word must match [xy]*, got '" + std::string(text) + "'");
  return Word(std::string(text));
}

Word Word::normal(unsigned xexp, unsigned yexp) { return Word(std::string(xexp, 'x') + std::string(yexp, 'y')); }

unsigned Word::count_x() const { return static_cast<unsigned>(std::count(letters_.begin(), letters_.end(), 'x')); }

unsigned Word::count_y() const { return static_cast<unsigned>(std::count(letters_.begin(), letters_.end(), 'y')); }

MWElement MWElement::one() { return term({0, 0}); }

MWElement MWElement::term(NormalMonomial m, QPoly coeff) {
  MWElement out;
  out.add(m, coeff);
  return out;
}

QPoly MWElement::coefficient(NormalMonomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QPoly{} : it->second;
}

void MWElement::add(NormalMonomial m, const QPoly &coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MWElement &MWElement::operator+=(const MWElement &rhs) {
  for (const auto &[m, c] : rhs.terms_) add(m, c);
  return *this;
}

MWElement &MWElement::operator*=(const QPoly &scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, c] : terms_) c *= scalar;
  return *this;
}

bool MWElement::is_natural() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto &t) { return t.second.is_natural(); });
}

MWElement normal_order(const Word &w, RewriteStrategy strategy, const Limits &limits) {
  require_within("word length", w.size(), limits.word_length);

  // Every rewrite preserves word length, so the pending set is a map over
  // words of one fixed length.  Terms are merged after each sweep.
  std::map<std::string, QPoly> pending{{w.letters(), QPoly(1)}};
  MWElement result;
  const QPoly q = QPoly::monomial(1);

  while (!pending.empty()) {
    std::map<std::string, QPoly> next;
    for (auto &[letters, coeff] : pending) {
      auto pos = strategy == RewriteStrategy::Leftmost ? letters.find("yx") : letters.rfind("yx");
      if (pos == std::string::npos) {
        auto xs = static_cast<std::uint32_t>(std::count(letters.begin(), letters.end(), 'x'));
        result.add({xs, static_cast<std::uint32_t>(letters.size()) - xs}, coeff);
        continue;
      }
      std::string swapped = letters;
      swapped[pos] = 'x';
      swapped[pos + 1] = 'y';
      std::string doubled = letters;
      doubled[pos] = 'x';

      auto add = [&next](std::string key, const QPoly &c) {
        auto [it, inserted] = next.try_emplace(std::move(key), c);
        if (!inserted) it->second += c;
      };
      add(std::move(swapped), coeff * q);
      add(std::move(doubled), coeff);
    }
    std::erase_if(next, [](const auto &entry) { return entry.second.is_zero(); });
    pending = std::move(next);
  }
  return result;
}

MWElement multiply(const MWElement &u, const MWElement &v, const Limits &limits) {
  // x^b1 y^c1 * x^b2 y^c2 = x^b1 (y^c1 x^b2) y^c2; only the middle is rewritten.
  std::map<std::pair<std::uint32_t, std::uint32_t>, MWElement> straightened;
  MWElement out;
  for (const auto &[m1, c1] : u.terms()) {
    for (const auto &[m2, c2] : v.terms()) {
      require_within("word length", std::size_t{m1.x} + m1.y + m2.x + m2.y, limits.word_length);
      auto key = std::make_pair(m1.y, m2.x);
      auto it = straightened.find(key);
      if (it == straightened.end()) {
        Word middle = Word::parse(std::string(m1.y, 'y') + std::string(m2.x, 'x'));
        it = straightened.emplace(key, normal_order(middle, RewriteStrategy::Leftmost, limits)).first;
      }
      const QPoly coeff = c1 * c2;
      for (const auto &[mid, cm] : it->second.terms())
        out.add({m1.x + mid.x, mid.y + m2.y}, cm * coeff);
    }
  }
  return out;
}

std::map<NormalMonomial, BigRational> specialize_q(const MWElement &u, const BigRational &at) {
  std::map<NormalMonomial, BigRational> out;
  for (const auto &[m, c] : u.terms()) {
    BigRational v = eval_at(c, at);
    if (!v.is_zero()) out.emplace(m, std::move(v));
  }
  return out;
}

namespace {

void skip_blanks(std::string_view text, std::size_t &pos) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
}

std::uint32_t read_exponent(std::string_view text, std::size_t &pos) {
  skip_blanks(text, pos);
  std::size_t start = pos;
  unsigned long value = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
    if (value > 1'000'000) throw ParseError("exponent too large in '" + std::string(text) + "'");
    ++pos;
  }
  if (pos == start) throw ParseError("expected a nonnegative integer at offset " + std::to_string(start) + " in '" +
                                     std::string(text) + "'");
  skip_blanks(text, pos);
  return static_cast<std::uint32_t>(value);
}

void expect(std::string_view text, std::size_t &pos, char c) {
  skip_blanks(text, pos);
  if (pos >= text.size() || text[pos] != c)
    throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos) + " in '" + std::string(text) +
                     "'");
  ++pos;
}

} // namespace

MonomialSeq MonomialSeq::parse(std::string_view text) {
  std::vector<ExpPair> pairs;
  std::size_t pos = 0;
  skip_blanks(text, pos);
  while (pos < text.size()) {
    expect(text, pos, '(');
    ExpPair p;
    p.a = read_exponent(text, pos);
    expect(text, pos, ',');
    p.b = read_exponent(text, pos);
    expect(text, pos, ')');
    pairs.push_back(p);
    skip_blanks(text, pos);
  }
  if (pairs.empty()) throw ParseError("empty exponent sequence");
  return MonomialSeq(std::move(pairs));
}

unsigned MonomialSeq::total_a() const {
  unsigned s = 0;
  for (const auto &p : pairs_) s += p.a;
  return s;
}

unsigned MonomialSeq::total_b() const {
  unsigned s = 0;
  for (const auto &p : pairs_) s += p.b;
  return s;
}

Word MonomialSeq::word() const {
  Word w;
  for (const auto &p : pairs_) w += Word::normal(p.a, p.b);
  return w;
}

MWElement monomial(const MonomialSeq &seq, const Limits &limits) {
  MWElement out = MWElement::one();
  for (const auto &p : seq.pairs()) out = multiply(out, MWElement::term({p.a, p.b}), limits);
  return out;
}

} // namespace qweyl
