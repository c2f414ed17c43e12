//! Exact rank of sparse integer matrices.
//!
//! Columns are reduced left to right against earlier pivots keyed by their lowest nonzero
//! row. Each reduction step is the fraction-free update `b·col − a·pivot`, followed by
//! division by the column content, so integer entries stay small for boundary matrices.
//! The integer routine is generic over the coefficient type and reports overflow instead
//! of wrapping; [`rational_rank`] escalates `i64 → i128 → BigInt` as needed.

use std::collections::HashMap;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

/// Sparse column: `(row, value)` pairs with strictly increasing rows and nonzero values.
pub type SparseColumn = Vec<(usize, i64)>;

pub trait ExactInteger: Clone + Integer + Signed + CheckedMul + CheckedSub + From<i64> {}

impl<T> ExactInteger for T where T: Clone + Integer + Signed + CheckedMul + CheckedSub + From<i64> {}

trait Elimination {
    type E: Clone;
    fn lift(&self, v: i64) -> Self::E;
    fn is_zero(&self, v: &Self::E) -> bool;
    /// `b·x − a·y`
    fn combine(&self, b: &Self::E, x: &Self::E, a: &Self::E, y: &Self::E) -> Option<Self::E>;
    fn normalize(&self, col: &mut [(usize, Self::E)]);
}

struct Integers<T>(PhantomData<T>);

impl<T: ExactInteger> Elimination for Integers<T> {
    type E = T;

    fn lift(&self, v: i64) -> T {
        T::from(v)
    }

    fn is_zero(&self, v: &T) -> bool {
        v.is_zero()
    }

    fn combine(&self, b: &T, x: &T, a: &T, y: &T) -> Option<T> {
        b.checked_mul(x)?.checked_sub(&a.checked_mul(y)?)
    }

    fn normalize(&self, col: &mut [(usize, T)]) {
        let mut g = T::zero();
        for (_, v) in col.iter() {
            g = g.gcd(v);
            if g.is_one() {
                return;
            }
        }
        if !g.is_zero() {
            for (_, v) in col.iter_mut() {
                *v = v.div_floor(&g);
            }
        }
    }
}

struct PrimeField {
    p: u64,
}

impl Elimination for PrimeField {
    type E = u64;

    fn lift(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn is_zero(&self, v: &u64) -> bool {
        *v == 0
    }

    fn combine(&self, b: &u64, x: &u64, a: &u64, y: &u64) -> Option<u64> {
        let p = self.p as u128;
        let bx = (*b as u128 * *x as u128) % p;
        let ay = (*a as u128 * *y as u128) % p;
        Some(((bx + p - ay) % p) as u64)
    }

    fn normalize(&self, _col: &mut [(usize, u64)]) {}
}

fn eliminate<A: Elimination>(arith: &A, cols: &[SparseColumn]) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, A::E)>> = HashMap::new();
    for col in cols {
        let mut cur: Vec<(usize, A::E)> =
            col.iter().map(|&(r, v)| (r, arith.lift(v))).filter(|(_, v)| !arith.is_zero(v)).collect();
        while let Some((low, a)) = cur.last().cloned() {
            let Some(piv) = pivots.get(&low) else {
                pivots.insert(low, cur);
                break;
            };
            let b = piv.last().expect("pivot columns are nonempty").1.clone();
            cur = combine_columns(arith, &b, &cur, &a, piv)?;
            arith.normalize(&mut cur);
        }
    }
    Some(pivots.len())
}

/// `b·x − a·y` on sorted sparse columns, dropping zeros.
fn combine_columns<A: Elimination>(
    arith: &A,
    b: &A::E,
    x: &[(usize, A::E)],
    a: &A::E,
    y: &[(usize, A::E)],
) -> Option<Vec<(usize, A::E)>> {
    let zero = arith.lift(0);
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (row, v) = match (x.get(i), y.get(j)) {
            (Some(p), Some(q)) if p.0 == q.0 => {
                i += 1;
                j += 1;
                (p.0, arith.combine(b, &p.1, a, &q.1)?)
            }
            (Some(p), Some(q)) if p.0 < q.0 => {
                i += 1;
                (p.0, arith.combine(b, &p.1, a, &zero)?)
            }
            (Some(p), None) => {
                i += 1;
                (p.0, arith.combine(b, &p.1, a, &zero)?)
            }
            (_, Some(q)) => {
                j += 1;
                (q.0, arith.combine(b, &zero, a, &q.1)?)
            }
            (None, None) => unreachable!(),
        };
        if !arith.is_zero(&v) {
            out.push((row, v));
        }
    }
    Some(out)
}

/// Rank over the rationals using integer arithmetic in `T`; `None` if `T` overflows.
pub fn try_integer_rank<T: ExactInteger>(cols: &[SparseColumn]) -> Option<usize> {
    eliminate(&Integers::<T>(PhantomData), cols)
}

/// Rank over the rationals, escalating to wider integer types on overflow.
pub fn rational_rank(cols: &[SparseColumn]) -> usize {
    try_integer_rank::<i64>(cols)
        .or_else(|| try_integer_rank::<i128>(cols))
        .or_else(|| try_integer_rank::<BigInt>(cols))
        .expect("big integers do not overflow")
}

/// Rank over `Z/p`.
pub fn rank_mod_p(cols: &[SparseColumn], p: u64) -> usize {
    eliminate(&PrimeField { p }, cols).expect("modular arithmetic does not overflow")
}
