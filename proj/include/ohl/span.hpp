#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ohl/finset.hpp"

namespace ohl {

struct Span {
  FinSet left;
  FinSet right;
  SubsetApex apex;
  FinFn f;  // apex -> left
  FinFn g;  // apex -> right
  bool identity = false;

  std::size_t size() const { return apex.size(); }
};

Span make_span(FinSet left, SubsetApex apex, FinSet right, std::vector<std::size_t> f,
               std::vector<std::size_t> g);
// Span whose apex is the plain set {0..n-1}.
Span make_span(FinSet left, std::size_t n, FinSet right, std::vector<std::size_t> f, std::vector<std::size_t> g);

Span identity_span(const FinSet& x);
Span compose_spans(const Span& a, const Span& b);  // a then b
// Same, also reporting the apex pairs (s, q) in apex order.
Span compose_spans(const Span& a, const Span& b, std::vector<std::pair<std::size_t, std::size_t>>& pairs);
Span tensor_spans(const Span& a, const Span& b);
Span braiding_span(const FinSet& x, const FinSet& y);
Span reverse_span(const Span& a);

enum class Direction { co, contra };
Span from_function(const FinFn& h, Direction d = Direction::co);

// Apex pairs (s, q) of compose_spans(a, b) in apex order, including the
// identity-absorbed cases.
std::vector<std::pair<std::size_t, std::size_t>> composite_pairs(const Span& a, const Span& b);

bool same_span(const Span& a, const Span& b);
bool is_invertible_span(const Span& a);

struct SpanMap {
  Span src;
  Span tgt;
  FinFn u;
};

SpanMap make_span_map(Span src, Span tgt, std::vector<std::size_t> u);  // throws TriangleViolation

// Pairing of the elements of a with those of b that agree under a class
// function. Elements are paired in apex order within each class.
struct ClassMatching {
  std::vector<std::size_t> map;                     // a-index -> b-index
  std::vector<std::vector<std::size_t>> ambiguous;  // b-side classes with more than one member
  std::optional<std::size_t> unmatched_a;           // first a element without partner
  std::optional<std::size_t> unmatched_b;
  bool ok() const { return !unmatched_a && !unmatched_b; }
};

ClassMatching match_by_class(const std::vector<std::size_t>& class_a, const std::vector<std::size_t>& class_b);

std::optional<SpanMap> spans_isomorphic(const Span& a, const Span& b);
std::optional<SpanMap> unique_map_to_monic(const Span& a, const Span& b);
bool has_monic_leg(const Span& b);
// Same for a target whose legs are only jointly injective.
std::optional<SpanMap> unique_map_by_legs(const Span& a, const Span& b);

}  // namespace ohl
