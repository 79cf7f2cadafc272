#pragma once

#include "mly/monads.hpp"
#include "oracle.hpp"

namespace fixtures {

using mly::Elem;
using mly::FinSet;
using mly::MealyMachine;
using mly::Table;

inline Table rows(const oracle::Rows& r, std::size_t cols) { return Table::from_rows(r, cols); }

inline oracle::Rows rows_of(const Table& t) { return t.to_rows(); }

inline MealyMachine machine(std::size_t na, std::size_t nb, std::size_t ne, const oracle::Rows& d,
                            const oracle::Rows& s) {
  return MealyMachine(FinSet(na), FinSet(nb), FinSet(ne), rows(d, ne), rows(s, ne));
}

// E = {e0, z}, z·z = z, d fixes every state, s(a, e0) = a and s(-, z) = a0.
inline mly::DoubleMonad absorbing() {
  return {machine(2, 2, 2, {{0, 1}, {0, 1}}, {{0, 0}, {1, 0}}), 0, rows({{0, 1}, {1, 1}}, 2)};
}

inline mly::FinMonoid absorbing_monoid() { return mly::FinMonoid(FinSet(2), 0, rows({{0, 1}, {1, 1}}, 2)); }

inline mly::MatchedPair absorbing_pair() {
  return mly::MatchedPair(absorbing_monoid(), FinSet(2), rows({{0, 1}, {0, 1}}, 2), rows({{0, 0}, {1, 0}}, 2));
}

inline MealyMachine flipflop() { return machine(2, 2, 2, {{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}); }

inline oracle::MonadTables tables_of(const mly::DoubleMonad& m) {
  return {rows_of(m.machine.d()), rows_of(m.machine.s()), m.e0, rows_of(m.mu)};
}

}  // namespace fixtures
