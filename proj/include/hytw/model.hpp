#pragma once

#include "hytw/value.hpp"

namespace hytw::model {

// Cantor pairing <a,b> = (a+b)(a+b+1)/2 + b and its projections.
std::uint64_t cantor_pair(std::uint64_t a, std::uint64_t b);
std::uint64_t cantor_fst(std::uint64_t p);
std::uint64_t cantor_snd(std::uint64_t p);

// (k^r)(0) = k, (k^r)(n+1) = r(n)
Oracle1 concat(std::uint64_t k, const Oracle1& r);
// (F*r)(k) = F(k^r)
Oracle1 star(const Functional2& f, const Oracle1& r);
// out(0) = x, out(k+1) = g(out(k), k)
Oracle1 prim_rec(std::uint64_t x, std::function<std::uint64_t(std::uint64_t, std::uint64_t)> g);
// r(n) = F(constant-n stream), computed as F(I*(n^0bar)) with I: s -> s(1)
Oracle1 diag_real(const Functional2& f);
// row k of r: position i holds r(2 + <k,i>)
Oracle1 row_extract(const Oracle1& r, std::uint64_t k);

// Shift-by-n and finite-permutation rearrangers, with the laws
//   (P_n*r)(i) = r(n+i)
//   (R_pi*r)(i) = r(pi(i)) for i < |pi|, r(i) otherwise.
Functional2 shift_functional(std::uint64_t n);
Functional2 rearrange_functional(const std::vector<std::uint64_t>& pi);

// Evaluation of a term of type <= 2 in the continuous model. env must bind
// every parameter. Throws UnboundParameter, TypeMismatch,
// NonterminationBudget.
Value eval(const terms::TermPtr& t, const Env& env, std::uint64_t fuel = kDefaultFuel);

std::uint64_t eval_nat(const terms::TermPtr& t, const Env& env, std::uint64_t fuel = kDefaultFuel);
Oracle1 eval_oracle(const terms::TermPtr& t, const Env& env, std::uint64_t fuel = kDefaultFuel);
Functional2 eval_functional(const terms::TermPtr& t, const Env& env,
                            std::uint64_t fuel = kDefaultFuel);

// Value agreement at a finite probe: Nats exactly, streams pointwise below
// check_positions, functionals on the supplied probe oracles.
bool values_agree(const Value& a, const Value& b, std::uint64_t check_positions,
                  const std::vector<Oracle1>& probe_oracles);

}  // namespace hytw::model
