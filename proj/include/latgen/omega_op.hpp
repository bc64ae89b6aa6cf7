#pragma once

#include <vector>

#include "latgen/finite_lattice.hpp"
#include "latgen/ordinal.hpp"

namespace latgen {

/** A total ω-sequence that is eventually constant: an explicit prefix followed
 *  by tail_value repeated forever. */
template <class T>
struct EventuallyConstantSeq {
  std::vector<T> prefix;
  T tail_value;

  T at(std::size_t i) const { return i < prefix.size() ? prefix[i] : tail_value; }
};

/** f(x0,x1,...) = join over i of (x_{2i} ∧ x_{2i+1}), evaluated exactly: the
 *  tail contributes (t ∧ t) = t, so the infinite join collapses to the prefix
 *  pairs joined with the tail value. Odd prefixes are padded with the tail. */
template <class T, class MeetFn, class JoinFn>
T omega_op_eval(const EventuallyConstantSeq<T>& seq, MeetFn meet, JoinFn join) {
  T acc = seq.tail_value;
  for (std::size_t i = 0; i < seq.prefix.size(); i += 2) {
    T a = seq.prefix[i];
    T b = seq.at(i + 1);
    acc = join(acc, meet(a, b));
  }
  return acc;
}

inline int omega_op_eval(const FiniteLattice& l, const EventuallyConstantSeq<int>& seq) {
  return omega_op_eval(
      seq, [&](int a, int b) { return l.meet(a, b); }, [&](int a, int b) { return l.join(a, b); });
}

inline SymElem omega_op_eval(const EventuallyConstantSeq<SymElem>& seq) {
  return omega_op_eval(
      seq, [](const SymElem& a, const SymElem& b) { return sym_meet(a, b); },
      [](const SymElem& a, const SymElem& b) { return sym_join(a, b); });
}

/// The sequence (x,y,x,y,...) collapsed to its pairing: f of it is x ∧ y.
template <class T>
EventuallyConstantSeq<T> encode_meet(const T& x, const T& y, const T& xy) {
  return {{x, y}, xy};
}

/// The sequence (x0,x0,x1,x1,...,xk,xk,xk,...): f of it is the join of the xi.
template <class T>
EventuallyConstantSeq<T> encode_join(const std::vector<T>& xs) {
  EventuallyConstantSeq<T> s{{}, xs.back()};
  for (const T& x : xs) {
    s.prefix.push_back(x);
    s.prefix.push_back(x);
  }
  return s;
}

}  // namespace latgen
