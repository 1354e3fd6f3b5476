//! Exact coefficients of the series counting compositions of maximum 3
//! that end with a maximal part (equivalently, semigroups with Frobenius
//! number `3m - 1`), their refinement by the number of maximal parts, the
//! constants `tau(k)`, and the growth-constant estimate for `n(g)`.
//!
//! The counting algorithm walks base words with parts in {1,2} (paired so
//! that `x_i + x_{m-1-i} >= 3`) followed by a final 3, finds the `f`
//! positions whose 2 can be raised to 3 without breaking admissibility,
//! and lets each base word contribute `q^genus (1 + q)^f`. Raisability
//! only depends on the placement of the 1s, so the `f` upgrades are
//! independent, and every target composition arises from exactly one base
//! word. A composition ending in a maximal 3 satisfies `x_i + x_{m-1-i}
//! >= 3`, forcing `m <= 2g/3`, which bounds the multiplicity loop.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{NsgError, Result};
use crate::kunz::Composition;
use crate::poly::Poly;
use crate::roots::real_root_in_unit_interval;
use crate::scalar::{DoubleDouble, Scalar};
use crate::series::fibonacci_series;
use crate::transfer::{builtin_model, ModelName};

/// Counts `c_g` of compositions with maximum 3 ending in a maximal part,
/// for `g` up to `max_genus`, with the refinement by the number `k` of
/// maximal parts.
#[derive(Debug, Clone, PartialEq)]
pub struct TildeCTable {
    max_genus: u32,
    c: Vec<BigUint>,
    by_k: BTreeMap<(u32, u32), BigUint>,
}

impl TildeCTable {
    pub fn max_genus(&self) -> u32 {
        self.max_genus
    }

    pub fn c(&self, g: u32) -> BigUint {
        self.c.get(g as usize).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.c
    }

    pub fn c_with_k_parts(&self, g: u32, k: u32) -> BigUint {
        self.by_k.get(&(g, k)).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn by_k(&self) -> &BTreeMap<(u32, u32), BigUint> {
        &self.by_k
    }
}

/// Exact table of `c_g` for `g <= max_genus`, enumerating base words per
/// multiplicity `m <= 2g/3` (parallel over `m`).
pub fn compute_tilde_c(max_genus: u32) -> TildeCTable {
    assert!(max_genus >= 3, "the first contribution appears at genus 3");
    assert!(max_genus <= 96, "u128 accumulators cover desk scale only");
    let g = max_genus as usize;
    let tables: Vec<PerMTable> = (2..=(2 * g / 3).max(2))
        .into_par_iter()
        .map(|m| per_multiplicity_table(m, g))
        .collect();
    let mut c = vec![0u128; g + 1];
    let mut by_k: BTreeMap<(u32, u32), u128> = BTreeMap::new();
    for t in tables {
        for (genus, v) in t.c.into_iter().enumerate() {
            c[genus] += v;
        }
        for (key, v) in t.by_k {
            *by_k.entry(key).or_insert(0) += v;
        }
    }
    TildeCTable {
        max_genus,
        c: c.into_iter().map(BigUint::from).collect(),
        by_k: by_k.into_iter().map(|(k, v)| (k, BigUint::from(v))).collect(),
    }
}

struct PerMTable {
    c: Vec<u128>,
    by_k: BTreeMap<(u32, u32), u128>,
}

fn per_multiplicity_table(m: usize, max_genus: usize) -> PerMTable {
    let n = m - 1; // parts x_1 .. x_n with x_n = 3
    let mut table = PerMTable { c: vec![0u128; max_genus + 1], by_k: BTreeMap::new() };
    // positions pair up as (i, n - i); an even n leaves the centre n/2
    let pairs: Vec<(usize, usize)> = (1..n).filter(|&i| i < n - i).map(|i| (i, n - i)).collect();
    let centre = if n >= 2 && n.is_multiple_of(2) { Some(n / 2) } else { None };
    let base_genus = 3 + if centre.is_some() { 2 } else { 0 } + 3 * pairs.len();
    if base_genus > max_genus {
        return table;
    }
    let binom = pascal_triangle(n);
    let mut x = vec![0u32; n + 1];
    x[n] = 3;
    if let Some(c) = centre {
        x[c] = 2;
    }
    enumerate_pairs(&pairs, 0, base_genus, max_genus, &mut x, &binom, &mut table);
    table
}

fn enumerate_pairs(
    pairs: &[(usize, usize)],
    next: usize,
    genus: usize,
    max_genus: usize,
    x: &mut [u32],
    binom: &[Vec<u128>],
    table: &mut PerMTable,
) {
    if genus > max_genus {
        return;
    }
    if next == pairs.len() {
        record_base_word(x, genus, max_genus, binom, table);
        return;
    }
    let (i, j) = pairs[next];
    for (a, b) in [(1u32, 2u32), (2, 1), (2, 2)] {
        x[i] = a;
        x[j] = b;
        enumerate_pairs(pairs, next + 1, genus + (a + b) as usize - 3, max_genus, x, binom, table);
    }
    x[i] = 0;
    x[j] = 0;
}

/// Count the raisable 2s of the base word and spread `(1 + q)^f` over the
/// table: choosing `j` of the `f` positions yields a composition of genus
/// `genus + j` with `j + 1` maximal parts.
fn record_base_word(
    x: &[u32],
    genus: usize,
    max_genus: usize,
    binom: &[Vec<u128>],
    table: &mut PerMTable,
) {
    let n = x.len() - 1;
    let mut f = 0usize;
    for k in 1..n {
        if x[k] != 2 {
            continue;
        }
        // a 2 can become a 3 unless a pair of 1s already adds up to it
        let mut raisable = true;
        for i in 1..=k / 2 {
            if x[i] + x[k - i] <= 2 {
                raisable = false;
                break;
            }
        }
        if raisable {
            f += 1;
        }
    }
    for (j, &ways) in binom[f].iter().enumerate() {
        let g = genus + j;
        if g > max_genus {
            break;
        }
        table.c[g] += ways;
        *table.by_k.entry((g as u32, j as u32 + 1)).or_insert(0) += ways;
    }
}

fn pascal_triangle(rows: usize) -> Vec<Vec<u128>> {
    let mut t: Vec<Vec<u128>> = Vec::with_capacity(rows + 1);
    for r in 0..=rows {
        let mut row = vec![1u128; r + 1];
        for c in 1..r {
            row[c] = t[r - 1][c - 1] + t[r - 1][c];
        }
        t.push(row);
    }
    t
}

/// All compositions of `g` with parts in {1,2,3} that end in a part 3 and
/// satisfy the semigroup inequalities, in lexicographic order.
pub fn tilde_compositions(g: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut parts: Vec<u32> = Vec::new();
    fn rec(parts: &mut Vec<u32>, remaining: u32, out: &mut Vec<Composition>) {
        if remaining == 0 {
            if parts.last() == Some(&3) {
                let c = Composition::new(parts.clone()).unwrap();
                if c.is_nsg() {
                    out.push(c);
                }
            }
            return;
        }
        for p in 1..=3.min(remaining) {
            parts.push(p);
            rec(parts, remaining - p, out);
            parts.pop();
        }
    }
    rec(&mut parts, g, &mut out);
    out
}

/// Brute-force table from filtered enumeration; the independent oracle for
/// [`compute_tilde_c`], desk-scale only.
pub fn brute_force_tilde_c(max_genus: u32) -> TildeCTable {
    assert!(max_genus <= 20, "brute force is meant for oracle duty");
    let mut c = vec![BigUint::zero(); max_genus as usize + 1];
    let mut by_k = BTreeMap::new();
    for g in 3..=max_genus {
        for comp in tilde_compositions(g) {
            c[g as usize] += 1u32;
            let k = comp.parts().iter().filter(|&&p| p == 3).count() as u32;
            *by_k.entry((g, k)).or_insert_with(BigUint::zero) += 1u32;
        }
    }
    TildeCTable { max_genus, c, by_k }
}

/// `tau(k)`: the limit proportion weight of compositions with `k` maximal
/// parts, as a sum `sum_g c_{g,k} omega^{-g}` evaluated in closed form.
/// Only `k = 1` (a single rational function) and `k = 2` (a rational
/// prefactor plus four transfer sums) are available exactly.
pub fn tau(k: u32) -> f64 {
    tau_detailed(k).value
}

/// Value plus a bound on the truncation error of the infinite sums
/// (zero for `k = 1`, which is a finite rational evaluation).
pub struct TauEstimate {
    pub value: f64,
    pub truncation_bound: f64,
}

#[allow(clippy::needless_range_loop)] // positional transfer-state tables
pub fn tau_detailed(k: u32) -> TauEstimate {
    assert!(k == 1 || k == 2, "closed forms exist for k in {{1, 2}} only");
    let q = DoubleDouble::golden_ratio_inv();
    let one = DoubleDouble::one();
    if k == 1 {
        // (1 + q^2) q^3 / (1 - 2q^3 - q^4)
        let num = (one + q.powi(2)) * q.powi(3);
        let den = one - DoubleDouble::from_f64(2.0) * q.powi(3) - q.powi(4);
        return TauEstimate { value: (num / den).to_f64(), truncation_bound: 0.0 };
    }
    // rational head: spins on the doubled graph of the two maximal parts
    let head = {
        let den1 = one
            - (DoubleDouble::from_f64(3.0) * q.powi(6)
                + DoubleDouble::from_f64(4.0) * q.powi(7)
                + q.powi(8));
        let inner = one
            + (q + q.powi(2)) * (one + q.powi(2))
                / (one - (DoubleDouble::from_f64(2.0) * q.powi(3) + q.powi(4)));
        (one + q.powi(3) + q.powi(4)) / den1 * q.powi(3) * inner * q.powi(3)
    };
    // p[ea][eo][n] = P_{n, ea, eo} at q, from the two-state path model
    let n_max = 420usize;
    let mut p = [[vec![DoubleDouble::zero(); n_max + 1], vec![DoubleDouble::zero(); n_max + 1]],
        [vec![DoubleDouble::zero(); n_max + 1], vec![DoubleDouble::zero(); n_max + 1]]];
    for ea in 0..2 {
        let mut v = [
            if ea == 1 { q } else { DoubleDouble::zero() },
            q.powi(2),
        ];
        for n in 0..=n_max {
            if n > 0 {
                v = [q * v[1], q.powi(2) * (v[0] + v[1])];
            }
            p[ea][0][n] = v[1];
            p[ea][1][n] = v[0] + v[1];
        }
    }
    let q4 = q.powi(4);
    // spectral radius of the two-state step certifies the decay: terms of
    // the first sum shrink like the radius, the wrapped sums like its
    // square; a 5% margin absorbs the pre-asymptotic regime
    let radius = tau2_term_ratio_bound().sqrt();
    let mut truncation = 0.0f64;
    let mut tail_sum = |start: usize, r_bound: f64, term: &dyn Fn(usize) -> DoubleDouble| {
        let mut acc = DoubleDouble::zero();
        let mut prev = f64::INFINITY;
        for n in start.. {
            assert!(2 * n < n_max, "sum failed to converge inside the table");
            let t = term(n);
            let tf = t.to_f64();
            debug_assert!(tf >= 0.0);
            acc += t;
            if n > start + 4 {
                let ratio = tf / prev;
                assert!(ratio <= r_bound, "geometric certificate violated: {ratio}");
                if tf < 1e-22 {
                    truncation += tf * r_bound / (1.0 - r_bound);
                    break;
                }
            }
            prev = tf;
        }
        acc
    };
    let r1 = (radius * 1.05).min(0.99);
    let r2 = (radius * radius * 1.05).min(0.99);
    let s2 = q4 * tail_sum(1, r1, &|n| p[0][0][n]);
    let s3 = q4
        * tail_sum(2, r2, &|n| {
            p[0][1][2 * n - 1] * (one + p[1][0][n - 1]) / (one - p[1][1][2 * n - 1])
        });
    let s4 = q4
        * tail_sum(3, r2, &|n| {
            (p[1][1][2 * n - 1] + p[1][0][n - 1]) / (one - p[1][1][2 * n - 1]) * p[0][0][n - 2]
        });
    let s5 = q4
        * tail_sum(3, r2, &|n| {
            (p[1][1][2 * n - 1] + p[1][0][n - 1]) / (one - p[1][1][2 * n - 1])
                * (p[0][1][2 * n - 3] * (one + p[1][0][n - 2]) / (one - p[1][1][2 * n - 3]))
        });
    TauEstimate {
        value: (head + s2 + s3 + s4 + s5).to_f64(),
        truncation_bound: truncation,
    }
}

/// `tau(k)` re-derived from a computed table: the partial sum of
/// `c_{g,k} omega^{-g}` up to the table bound plus a geometric tail
/// anchored at the last term with ratio `omega^{-1} / rho_k`, where
/// `rho_k` is the dominant singularity of the k-part series.
pub fn tau_from_table(table: &TildeCTable, k: u32) -> f64 {
    assert!(k == 1 || k == 2);
    let q = DoubleDouble::golden_ratio_inv();
    let g_max = table.max_genus();
    let mut sum = DoubleDouble::zero();
    for g in 1..=g_max {
        let c = table.c_with_k_parts(g, k);
        if !c.is_zero() {
            sum += DoubleDouble::from_bigint(&c.into()) * q.powi(g);
        }
    }
    let denominator = if k == 1 {
        // 1 - 2q^3 - q^4
        Poly::new(vec![1i64.into(), 0.into(), 0.into(), (-2i64).into(), (-1i64).into()])
    } else {
        // 1 - 3q^6 - 4q^7 - q^8
        Poly::new(vec![
            1i64.into(),
            0.into(),
            0.into(),
            0.into(),
            0.into(),
            0.into(),
            (-3i64).into(),
            (-4i64).into(),
            (-1i64).into(),
        ])
    };
    let rho = real_root_in_unit_interval(&denominator).expect("radius polynomial");
    let ratio = q.to_f64() / rho;
    debug_assert!(ratio < 1.0);
    let last = DoubleDouble::from_bigint(&table.c_with_k_parts(g_max, k).into()).to_f64()
        * q.powi(g_max).to_f64();
    sum.to_f64() + last * ratio / (1.0 - ratio)
}

/// Bracket for the growth constant `C` with `n(g) ~ C omega^g`.
#[derive(Debug, Clone, PartialEq)]
pub struct CEstimate {
    /// `(5+sqrt 5)/10 (1 + sum_{g<=G} c_g omega^{-g})`: every term counts
    /// genuine semigroups, so this only ever grows toward `C`.
    pub lower: f64,
    /// Same sum with the missing coefficients extrapolated geometrically at
    /// ratio `c_G / c_{G-1}`; heuristic, not a proven bound.
    pub heuristic_upper: f64,
    /// Midpoint of the bracket.
    pub estimate: f64,
    pub max_genus: u32,
}

/// Estimate the constant from coefficients up to `max_genus`.
pub fn estimate_c(max_genus: u32) -> Result<CEstimate> {
    if max_genus < 10 {
        return Err(NsgError::InsufficientData { need: 10, got: max_genus });
    }
    Ok(estimate_c_from_table(&compute_tilde_c(max_genus)))
}

/// Bracket the constant from a computed table. The tail of the upper bound
/// uses the last observed coefficient ratio; anchoring it at the reciprocal
/// convergence radius of the lower-bound series instead would be an
/// alternative, but the observed ratio is kept as the default.
pub fn estimate_c_from_table(table: &TildeCTable) -> CEstimate {
    let g_max = table.max_genus();
    let q = DoubleDouble::golden_ratio_inv();
    let one = DoubleDouble::one();
    let lead = (DoubleDouble::from_f64(5.0) + DoubleDouble::from_f64(5.0).sqrt())
        / DoubleDouble::from_f64(10.0);
    let mut partial = DoubleDouble::zero();
    for g in 3..=g_max {
        let c = table.c(g);
        if !c.is_zero() {
            partial += DoubleDouble::from_bigint(&c.into()) * q.powi(g);
        }
    }
    let lower = lead * (one + partial);
    let last = DoubleDouble::from_bigint(&table.c(g_max).into());
    let prev = DoubleDouble::from_bigint(&table.c(g_max - 1).into());
    let ratio = last / prev * q;
    assert!(ratio.to_f64() < 1.0, "geometric extrapolation requires ratio below omega");
    let tail = last * q.powi(g_max) * ratio / (one - ratio);
    let upper = lead * (one + partial + tail);
    CEstimate {
        lower: lower.to_f64(),
        heuristic_upper: upper.to_f64(),
        estimate: (lower.to_f64() + upper.to_f64()) / 2.0,
        max_genus: g_max,
    }
}

/// Census of compositions with maximum at most 3 via the factorisation
/// into an ending-with-3 head and a {1,2} tail: the convolution of
/// `1 + sum c_g q^g` with the Fibonacci series.
pub fn max3_census(max_genus: u32) -> Vec<BigUint> {
    let g = max_genus as usize;
    let fib: Vec<BigUint> = fibonacci_series(g + 1)
        .coeffs()
        .iter()
        .map(|c| c.to_integer().to_biguint().expect("positive"))
        .collect();
    let table = if max_genus >= 3 { Some(compute_tilde_c(max_genus)) } else { None };
    (0..=g)
        .map(|genus| {
            let mut acc = fib[genus].clone();
            if let Some(t) = &table {
                for k in 3..=genus {
                    let c = t.c(k as u32);
                    if !c.is_zero() {
                        acc += c * &fib[genus - k];
                    }
                }
            }
            acc
        })
        .collect()
}

/// Counts of compositions satisfying only the first-line inequalities
/// `x_{i+j} <= x_i + x_j` (`i + j` up to the number of parts), by DFS with
/// prefix feasibility: the admissible values at each step form an interval
/// whose top is the running pairwise minimum.
pub fn nu_count(max_genus: u32) -> Vec<BigUint> {
    let g = max_genus as usize;
    let mut counts = vec![0u64; g + 1];
    counts[0] = 1;
    let mut x: Vec<u32> = Vec::new();
    fn rec(x: &mut Vec<u32>, sum: usize, g: usize, counts: &mut [u64]) {
        if sum > 0 {
            counts[sum] += 1;
        }
        if sum == g {
            return;
        }
        let k = x.len() + 1;
        let mut bound = (g - sum) as u32;
        for i in 1..=k / 2 {
            bound = bound.min(x[i - 1] + x[k - i - 1]);
        }
        for v in 1..=bound {
            x.push(v);
            rec(x, sum + v as usize, g, counts);
            x.pop();
        }
    }
    rec(&mut x, 0, g, &mut counts);
    counts.into_iter().map(BigUint::from).collect()
}

/// The `n(g) ~ C omega^g` asymptotics is reproduced at desk scale by the
/// ratio `n_{<=3}(g) / omega^g`; exposed for diagnostics.
pub fn max3_ratio(census: &[BigUint], g: u32) -> f64 {
    let q = DoubleDouble::golden_ratio_inv();
    let v = DoubleDouble::from_bigint(&census[g as usize].clone().into());
    (v * q.powi(g)).to_f64()
}

/// Decay certificate for the wrapped tau(2) sums: the squared spectral
/// radius of the two-state path step bounds their term ratios.
pub fn tau2_term_ratio_bound() -> f64 {
    let model = builtin_model(ModelName::PFlagged { start_one: true, end_one: true });
    let radius = model.spectrum_at(Scalar::golden_ratio_inv())[0].norm();
    radius * radius
}
