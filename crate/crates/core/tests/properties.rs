use proptest::prelude::*;

use mck_core::exact::{int, rank, rank_and_kernel, ExactMatrix};
use mck_core::fano::{dim_rfxf_bound, FanoContext};
use mck_core::motive::{CohModel, Corr, Tensor};
use mck_core::schubert::{catalan, gc_monomial, SchubertElement};

fn matrix(rows: usize, cols: usize, entries: &[i64]) -> ExactMatrix {
    let data = (0..rows)
        .map(|i| (0..cols).map(|j| int(entries[i * cols + j])).collect())
        .collect();
    ExactMatrix::from_rows(data, cols).unwrap()
}

fn arb_matrix() -> impl Strategy<Value = ExactMatrix> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
        prop::collection::vec(-3i64..=3, r * c).prop_map(move |e| matrix(r, c, &e))
    })
}

/// A random self-correspondence of the cubic n-fold built from even-degree pure tensors.
fn arb_even_corr(n: u32) -> impl Strategy<Value = Corr> {
    let model = CohModel::cubic(n).unwrap();
    let even: Vec<usize> = (0..model.size())
        .filter(|&i| model.degree(i) % 2 == 0)
        .collect();
    let len = even.len();
    prop::collection::vec((0..len, 0..len, -2i64..=2), 1..5).prop_map(move |terms| {
        let mut t = Tensor::zero(2);
        for (a, b, k) in terms {
            t.add_term(vec![even[a], even[b]], int(k));
        }
        Corr::new(1, 1, t).unwrap()
    })
}

proptest! {
    #[test]
    fn rank_is_transpose_invariant(m in arb_matrix()) {
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn kernel_vectors_are_killed(m in arb_matrix()) {
        let (r, kernel) = rank_and_kernel(&m);
        prop_assert_eq!(r + kernel.len(), m.cols());
        for v in kernel {
            prop_assert!(m.mul_vec(&v).unwrap().iter().all(|x| *x == int(0)));
        }
    }

    #[test]
    fn schubert_product_commutes(m in 4u32..8, a1 in 0u32..4, b1 in 0u32..3, a2 in 0u32..4, b2 in 0u32..3) {
        let x = gc_monomial(a1, b1, m);
        let y = gc_monomial(a2, b2, m);
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap(), gc_monomial(a1 + a2, b1 + b2, m));
    }

    #[test]
    fn point_class_counts_catalan_paths(m in 3u32..11) {
        let top = 2 * (m - 2);
        prop_assert_eq!(gc_monomial(top, 0, m).degree(), catalan(m - 2));
        prop_assert_eq!(
            SchubertElement::unit(m).mul(&SchubertElement::point(m)).unwrap(),
            SchubertElement::point(m)
        );
    }

    #[test]
    fn hilbert_function_is_palindromic(n in 3u32..9) {
        let ctx = FanoContext::new(n).unwrap();
        let h = ctx.hilbert_function();
        prop_assert!(h.is_palindromic(ctx.dim() as usize + 1));
        for i in 0..=ctx.dim() {
            prop_assert!(ctx.pairing_is_perfect(i).unwrap());
        }
    }

    #[test]
    fn rfxf_bound_is_symmetric(n in 3u32..12, k in 0u32..40) {
        let top = 4 * n - 8;
        prop_assume!(k <= top);
        prop_assert_eq!(dim_rfxf_bound(k, n).unwrap(), dim_rfxf_bound(top - k, n).unwrap());
    }

    #[test]
    fn transpose_is_an_involution(n in 2u32..6, seed in any::<u64>()) {
        let model = CohModel::cubic(n).unwrap();
        let f = corr_from_seed(&model, seed);
        prop_assert_eq!(f.transpose(&model).transpose(&model), f);
    }
}

/// Pure tensors of even total degree, odd⊗odd included, chosen deterministically from a seed.
fn corr_from_seed(model: &CohModel, mut seed: u64) -> Corr {
    let size = model.size() as u64;
    let mut t = Tensor::zero(2);
    for _ in 0..4 {
        let a = (seed % size) as usize;
        seed /= size;
        let b = (seed % size) as usize;
        seed /= size;
        let k = (seed % 5) as i64 - 2;
        seed = seed
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        if (model.degree(a) + model.degree(b)) % 2 == 0 {
            t.add_term(vec![a, b], int(k));
        }
    }
    Corr::new(1, 1, t).unwrap()
}

fn functoriality(n: u32) -> impl Strategy<Value = (Corr, Corr)> {
    (arb_even_corr(n), arb_even_corr(n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn realization_is_functorial_on_fourfold((f, g) in functoriality(4)) {
        let model = CohModel::cubic(4).unwrap();
        let fg = Corr::compose(&model, &f, &g).unwrap();
        let lhs = fg.realization_matrix(&model).unwrap();
        let rhs = f
            .realization_matrix(&model)
            .unwrap()
            .mul(&g.realization_matrix(&model).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn realization_is_functorial_on_threefold((f, g) in functoriality(3)) {
        let model = CohModel::cubic(3).unwrap();
        let fg = Corr::compose(&model, &f, &g).unwrap();
        let lhs = fg.realization_matrix(&model).unwrap();
        let rhs = f
            .realization_matrix(&model)
            .unwrap()
            .mul(&g.realization_matrix(&model).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transpose_reverses_composition((f, g) in functoriality(4)) {
        let model = CohModel::cubic(4).unwrap();
        let fg = Corr::compose(&model, &f, &g).unwrap();
        let gt_ft = Corr::compose(&model, &g.transpose(&model), &f.transpose(&model)).unwrap();
        prop_assert_eq!(fg.transpose(&model), gt_ft);
    }

    #[test]
    fn transpose_reverses_composition_with_odd_classes(n in 2u32..6, s1 in any::<u64>(), s2 in any::<u64>()) {
        let model = CohModel::cubic(n).unwrap();
        let f = corr_from_seed(&model, s1);
        let g = corr_from_seed(&model, s2);
        let fg = Corr::compose(&model, &f, &g).unwrap();
        let gt_ft = Corr::compose(&model, &g.transpose(&model), &f.transpose(&model)).unwrap();
        prop_assert_eq!(fg.transpose(&model), gt_ft);
    }
}
