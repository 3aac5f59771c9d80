#pragma once

#include "oresolve/sumexpr.hpp"

namespace oresolve {

// S_w as an explicit nested Sum[...] expression (definition unrolled one
// level; inner levels stay harmonic).
SumExpr harmonic_to_nested(const HarmonicSum& h);

// Product of two harmonic sums at the same argument as an integer linear
// combination of single harmonic sums (quasi-shuffle relations).
SumExpr quasi_shuffle(const HarmonicSum& a, const HarmonicSum& b);

// Eliminate products of harmonic sums inside every term via quasi-shuffle.
// Nested Sum factors that match the harmonic pattern are recognized first;
// anything outside the fragment is left as an opaque product.
SumExpr reduce_products(const SumExpr& e);

// Rewrite e(N+j) with every sum/product argument synchronized back to N,
// peeling boundary terms.  Valid where both sides are defined.
SumExpr synchronize_shift(const SumExpr& e, long j);

// Rewrite nested Sum factors of the shape c * x^k / k^w * S_tail(k) as
// harmonic sums (with exact boundary corrections for lower bounds != 1).
SumExpr recognize_harmonics(const SumExpr& e);

}  // namespace oresolve
