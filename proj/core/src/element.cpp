#include "cox/element.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "cox/spherical.hpp"

namespace cox {

namespace {

// One stack pass of free cancellation (s s -> empty).
Word cancel_adjacent(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (char c : w) {
    if (!out.empty() && out.back() == c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

// Replaces the alternating run of length `len` starting at `pos` by its
// mirror, in place.
void apply_braid(Word& w, std::size_t pos, std::size_t len) {
  const char s = w[pos];
  const char t = w[pos + 1];
  for (std::size_t k = 0; k < len; ++k) w[pos + k] = (k % 2 == 0) ? t : s;
}

// Explores the braid class of `start` (all letters distinct-adjacent).
// If some member admits a free cancellation, returns that member with the
// pair deleted; otherwise returns the shortlex-least member of the class.
// The flag in the pair is true when a deletion happened.
std::pair<Word, bool> braid_step(const CoxeterMatrix& m, const Word& start) {
  std::unordered_set<Word> seen;
  std::deque<const Word*> queue;
  queue.push_back(&*seen.insert(start).first);

  while (!queue.empty()) {
    const Word u = *queue.front();
    queue.pop_front();

    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      const char s = u[i];
      const char t = u[i + 1];
      if (s == t) {
        Word shorter = u;
        shorter.erase(i, 2);
        return {cancel_adjacent(shorter), true};
      }
      const auto ord = m.order(s, t);
      if (ord == CoxeterMatrix::kInfinity) continue;
      if (i + ord > u.size()) continue;
      bool alternating = true;
      for (std::size_t k = 2; k < ord; ++k)
        if (u[i + k] != ((k % 2 == 0) ? s : t)) {
          alternating = false;
          break;
        }
      if (!alternating) continue;
      Word v = u;
      apply_braid(v, i, ord);
      auto [it, inserted] = seen.insert(std::move(v));
      if (inserted) queue.push_back(&*it);
    }
  }

  // No deletion anywhere in the class: `start` is reduced (Tits).
  const Word* best = &start;
  for (const Word& u : seen)
    if (shortlex_less(u, *best)) best = &u;
  return {*best, false};
}

}  // namespace

Word canonical_word(const CoxeterMatrix& m, const Word& w, std::size_t cap) {
  if (w.size() > cap) throw WordTooLong(w.size(), cap);
  Word cur = cancel_adjacent(w);
  for (;;) {
    auto [next, deleted] = braid_step(m, cur);
    cur = std::move(next);
    if (!deleted) return cur;
  }
}

std::vector<Word> reduced_words(const CoxeterMatrix& m, const Word& reduced,
                                std::size_t limit) {
  std::unordered_set<Word> seen{reduced};
  std::deque<Word> queue{reduced};
  while (!queue.empty()) {
    Word u = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      const char s = u[i];
      const char t = u[i + 1];
      if (s == t) throw Error("reduced_words: input word is not reduced");
      const auto ord = m.order(s, t);
      if (ord == CoxeterMatrix::kInfinity || i + ord > u.size()) continue;
      bool alternating = true;
      for (std::size_t k = 2; k < ord; ++k)
        if (u[i + k] != ((k % 2 == 0) ? s : t)) {
          alternating = false;
          break;
        }
      if (!alternating) continue;
      Word v = u;
      apply_braid(v, i, ord);
      if (seen.insert(v).second) {
        if (seen.size() > limit)
          throw Error("reduced_words: braid class exceeds limit");
        queue.push_back(std::move(v));
      }
    }
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

GroupElement reduce(const MatrixPtr& m, const Word& w, std::size_t cap) {
  for (char c : w)
    if (static_cast<unsigned char>(c) >= static_cast<unsigned>(m->rank()))
      throw Error("letter out of range for rank " + std::to_string(m->rank()));
  return GroupElement(m, canonical_word(*m, w, cap));
}

GroupElement multiply(const GroupElement& a, const GroupElement& b,
                      std::size_t cap) {
  if (a.matrix() != b.matrix() &&
      !a.matrix()->same_presentation(*b.matrix()))
    throw MatrixMismatch("elements belong to different presentations");
  return reduce(a.matrix(), a.word() + b.word(), cap);
}

GroupElement invert(const GroupElement& a, std::size_t cap) {
  Word rev(a.word().rbegin(), a.word().rend());
  return reduce(a.matrix(), rev, cap);
}

bool equal(const GroupElement& a, const GroupElement& b) {
  if (a.matrix() != b.matrix() &&
      !a.matrix()->same_presentation(*b.matrix()))
    throw MatrixMismatch("elements belong to different presentations");
  return a.word() == b.word();
}

bool in_parabolic(const GroupElement& a, ParabolicSubset t) {
  return a.support().subset_of(t);
}

GroupElement longest_element(const MatrixPtr& m, ParabolicSubset t,
                             std::size_t cap) {
  const auto verdict = is_spherical(*m, t);
  if (!verdict.finite)
    throw NotSpherical("parabolic on {" + subset_names(*m, t) +
                       "} is infinite: " + verdict.describe());

  GroupElement w = GroupElement::identity(m);
  const auto gens = t.indices();
  for (bool ascended = true; ascended;) {
    ascended = false;
    for (int g : gens) {
      GroupElement next = reduce(m, w.word() + static_cast<char>(g), cap);
      if (next.length() > w.length()) {
        w = std::move(next);
        ascended = true;
        break;
      }
    }
  }
  if (!is_longest_in(w, t, cap))
    throw Error("internal: ascent endpoint fails the descent criterion");
  return w;
}

bool is_longest_in(const GroupElement& a, ParabolicSubset t, std::size_t cap) {
  if (!in_parabolic(a, t)) return false;
  for (int g : t.indices()) {
    GroupElement next = reduce(a.matrix(), a.word() + static_cast<char>(g), cap);
    if (next.length() >= a.length()) return false;
  }
  return true;
}

std::optional<int> element_order(const GroupElement& a, int max_power,
                                 std::size_t cap) {
  GroupElement p = a;  // a^k at iteration k
  for (int k = 1; k <= max_power; ++k) {
    if (p.is_identity()) return k;
    if (k == max_power) break;
    try {
      p = multiply(p, a, cap);
    } catch (const WordTooLong&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace cox
