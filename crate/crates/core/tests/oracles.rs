//! Independent reference computations, written without the library's ring code,
//! compared against the library on ranges wider than the unit tests cover.

use std::collections::BTreeMap;

use mck_core::exact::int;
use mck_core::fano::{r_vector, FanoContext};
use mck_core::hodge::{gs_fano_poincare, hypersurface_hodge, verify_gsv_identity};
use mck_core::motive::projectors::diagonal_self_intersection;
use mck_core::motive::CohModel;
use mck_core::schubert::{catalan, gc_monomial};

/// Two-row Young diagrams in a 2 × (m-2) box, as (a, b) with a ≥ b.
type Diagram = (u32, u32);

/// Multiplies a class by g^a c^b by adding boxes one at a time.
fn path_count(m: u32, g_power: u32, c_power: u32) -> BTreeMap<Diagram, i128> {
    let w = m - 2;
    let mut state: BTreeMap<Diagram, i128> = BTreeMap::from([((0, 0), 1)]);
    for _ in 0..c_power {
        let mut next = BTreeMap::new();
        for (&(a, b), &k) in &state {
            if a < w {
                *next.entry((a + 1, b + 1)).or_insert(0) += k;
            }
        }
        state = next;
    }
    for _ in 0..g_power {
        let mut next = BTreeMap::new();
        for (&(a, b), &k) in &state {
            if a < w {
                *next.entry((a + 1, b)).or_insert(0) += k;
            }
            if b < a {
                *next.entry((a, b + 1)).or_insert(0) += k;
            }
        }
        state = next;
    }
    state
}

fn oracle_degree(m: u32, g_power: u32, c_power: u32) -> i128 {
    let w = m - 2;
    path_count(m, g_power, c_power)
        .get(&(w, w))
        .copied()
        .unwrap_or(0)
}

/// deg_F(g^a c^b) with [F] = 18 g²c + 9 c².
fn oracle_fano_degree(n: u32, a: u32, b: u32) -> i128 {
    let m = n + 2;
    18 * oracle_degree(m, a + 2, b + 1) + 9 * oracle_degree(m, a, b + 2)
}

fn binom(n: i128, k: i128) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// χ of a cubic n-fold: 3 · [h^n] (1+h)^{n+2} / (1+3h).
fn oracle_cubic_euler(n: u32) -> i128 {
    let n = n as i128;
    3 * (0..=n)
        .map(|j| binom(n + 2, j) * (-3i128).pow((n - j) as u32))
        .sum::<i128>()
}

/// Primitive middle Hodge numbers of the Fermat cubic: its Jacobian ring is
/// spanned by squarefree monomials, and h^{n-p,p} sits in degree 3(p+1) - (n+2).
fn oracle_cubic_hodge(n: u32) -> Vec<u64> {
    (0..=n as i128)
        .map(|p| binom(n as i128 + 2, 3 * (p + 1) - (n as i128 + 2)) as u64)
        .collect()
}

#[test]
fn grassmannian_degrees_against_path_counts() {
    for m in 4..=10 {
        let top = 2 * (m - 2);
        for b in 0..=top / 2 {
            let a = top - 2 * b;
            let lib = gc_monomial(a, b, m).degree();
            assert_eq!(
                lib,
                int(oracle_degree(m, a, b) as i64),
                "m = {m}, g^{a}c^{b}"
            );
        }
        assert_eq!(catalan(m - 2), int(oracle_degree(m, top, 0) as i64));
    }
}

#[test]
fn golden_gr26_values() {
    assert_eq!(oracle_degree(6, 8, 0), 14);
    assert_eq!(oracle_degree(6, 6, 1), 5);
    assert_eq!(oracle_degree(6, 4, 2), 2);
    assert_eq!(gc_monomial(8, 0, 6).degree(), int(14));
    assert_eq!(gc_monomial(6, 1, 6).degree(), int(5));
    assert_eq!(gc_monomial(4, 2, 6).degree(), int(2));
}

#[test]
fn fano_degrees_against_path_counts() {
    assert_eq!(oracle_fano_degree(4, 4, 0), 108);
    assert_eq!(oracle_fano_degree(3, 2, 0), 45);
    for n in 3..=8 {
        let ctx = FanoContext::new(n).unwrap();
        let dim = 2 * n - 4;
        for b in 0..=dim / 2 {
            let a = dim - 2 * b;
            assert_eq!(
                ctx.degree_f(a, b),
                int(oracle_fano_degree(n, a, b) as i64),
                "n = {n}"
            );
        }
    }
}

#[test]
fn hilbert_function_against_formula() {
    for n in 3..=10 {
        let h = FanoContext::new(n).unwrap().hilbert_function();
        assert_eq!(h.as_slice(), r_vector(n).unwrap().as_slice(), "n = {n}");
    }
}

#[test]
fn cubic_hodge_against_fermat_jacobian_ring() {
    for n in 1..=10 {
        assert_eq!(
            hypersurface_hodge(3, n).unwrap(),
            oracle_cubic_hodge(n),
            "n = {n}"
        );
    }
}

#[test]
fn euler_characteristics() {
    assert_eq!(oracle_cubic_euler(2), 9);
    assert_eq!(oracle_cubic_euler(3), -6);
    assert_eq!(oracle_cubic_euler(4), 27);
    for n in 2..=6 {
        let model = CohModel::cubic(n).unwrap();
        assert_eq!(model.euler_characteristic() as i128, oracle_cubic_euler(n));
        assert_eq!(
            diagonal_self_intersection(&model),
            int(oracle_cubic_euler(n) as i64)
        );
    }
}

#[test]
fn fano_poincare_frozen() {
    assert_eq!(gs_fano_poincare(3).unwrap().as_slice(), &[1, 10, 45, 10, 1]);
    let p4 = gs_fano_poincare(4).unwrap();
    assert_eq!(p4.as_slice(), &[1, 0, 23, 0, 276, 0, 23, 0, 1]);
    assert_eq!(p4.euler_characteristic(), 324);
    for n in 3..=8 {
        let r = verify_gsv_identity(n).unwrap();
        assert_eq!(r.lhs, r.rhs, "n = {n}");
    }
}
