//! Randomized algebraic laws.

use eqkl::kl::palindromic_solve;
use eqkl::kronecker::{kronecker, ClassFunction};
use eqkl::lattice::lattice_identity_checks;
use eqkl::partition::{factorial, partitions_of};
use eqkl::plethysm::plethysm_schur;
use eqkl::power_sum::{from_power_sums, to_power_sums};
use eqkl::{FlatLattice, GradedSchur, Matroid, Partition, SchurExpansion};
use proptest::prelude::*;

fn partition_of(n: usize, idx: usize) -> Partition {
    let all = partitions_of(n);
    all[idx % all.len()].clone()
}

/// Small virtual expansions with terms of degree at most `max_deg`.
fn expansion(max_deg: usize) -> impl Strategy<Value = SchurExpansion> {
    proptest::collection::vec((0..=max_deg, 0usize..64, -3i64..=3), 0..4)
        .prop_map(|terms| SchurExpansion::from_terms(terms.into_iter().map(|(n, idx, c)| (partition_of(n, idx), c))))
}

/// Homogeneous expansions of degree `n`.
fn homogeneous(n: usize) -> impl Strategy<Value = SchurExpansion> {
    proptest::collection::vec((0usize..64, -3i64..=3), 1..4)
        .prop_map(move |terms| SchurExpansion::from_terms(terms.into_iter().map(|(idx, c)| (partition_of(n, idx), c))))
}

fn effective_homogeneous(n: usize) -> impl Strategy<Value = SchurExpansion> {
    proptest::collection::vec((0usize..64, 1i64..=2), 1..3)
        .prop_map(move |terms| SchurExpansion::from_terms(terms.into_iter().map(|(idx, c)| (partition_of(n, idx), c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_commutative(f in expansion(3), g in expansion(3)) {
        prop_assert_eq!(f.multiply(&g), g.multiply(&f));
    }

    #[test]
    fn multiplication_is_associative(f in expansion(2), g in expansion(2), h in expansion(2)) {
        prop_assert_eq!(f.multiply(&g).multiply(&h), f.multiply(&g.multiply(&h)));
    }

    #[test]
    fn multiplication_distributes(f in expansion(3), g in expansion(3), h in expansion(3)) {
        prop_assert_eq!(f.multiply(&(&g + &h)), &f.multiply(&g) + &f.multiply(&h));
    }

    #[test]
    fn products_with_rows_and_columns_are_pieri(f in expansion(4), k in 0usize..=5) {
        prop_assert_eq!(f.multiply(&SchurExpansion::h(k)), f.pieri_row(k));
        prop_assert_eq!(f.multiply(&SchurExpansion::e(k)), f.pieri_col(k));
    }

    #[test]
    fn power_sum_round_trip(f in expansion(8)) {
        prop_assert_eq!(from_power_sums(&to_power_sums(&f)).unwrap(), f);
    }

    #[test]
    fn induction_multiplies_dimensions(a in 0usize..=4, b in 0usize..=4, seed in any::<(u64, u64)>()) {
        let f = SchurExpansion::schur(partition_of(a, seed.0 as usize)).scale(1 + (seed.0 % 3) as i64);
        let g = SchurExpansion::schur(partition_of(b, seed.1 as usize)) - SchurExpansion::schur(partition_of(b, seed.1 as usize + 1)).scale(2);
        let lhs = f.multiply(&g).dimension() * (factorial(a) * factorial(b)) as i128;
        let rhs = f.dimension() * g.dimension() * factorial(a + b) as i128;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kronecker_is_commutative((n, f, g) in (1usize..=6).prop_flat_map(|n| (Just(n), homogeneous(n), homogeneous(n)))) {
        prop_assert_eq!(kronecker(&f, &g), kronecker(&g, &f));
        let unit = SchurExpansion::h(n);
        prop_assert_eq!(kronecker(&f, &unit), f.clone());
        prop_assert_eq!(kronecker(&unit, &f), f);
    }

    #[test]
    fn kronecker_multiplies_dimensions(n in 1usize..=7, a in 0usize..64, b in 0usize..64) {
        let (la, lb) = (partition_of(n, a), partition_of(n, b));
        let product = kronecker(&SchurExpansion::schur(la.clone()), &SchurExpansion::schur(lb.clone()));
        let identity = eqkl::characters::table(n).index_of(&Partition::column(n)).unwrap();
        let at_identity = ClassFunction::of(&product, n).values[identity];
        prop_assert_eq!(at_identity, (la.dimension() * lb.dimension()) as i128);
        prop_assert_eq!(product.dimension(), (la.dimension() * lb.dimension()) as i128);
    }

    #[test]
    fn plethysm_degrees_multiply(
        (a, b, f, g) in (1usize..=3, 1usize..=2)
            .prop_flat_map(|(a, b)| (Just(a), Just(b), homogeneous(a), effective_homogeneous(b)))
    ) {
        let composed = plethysm_schur(&f, &g).unwrap();
        prop_assert!(composed.is_empty() || composed.homogeneous_degree() == Some(a * b));
    }

    #[test]
    fn palindromic_solve_round_trips_schur_payloads(d in 1i32..10, coeffs in proptest::collection::vec(expansion(3), 5)) {
        let len = ((d + 1) / 2) as usize;
        let p = GradedSchur::from_coeffs(coeffs.into_iter().take(len).collect());
        let r = &p.reverse(d) - &p;
        prop_assert_eq!(palindromic_solve(d, &r).unwrap(), p);
    }

    #[test]
    fn graph_lattice_identities(edges in proptest::collection::vec((0usize..5, 0usize..5), 1..=8)) {
        let edges: Vec<(usize, usize)> = edges.into_iter().filter(|(a, b)| a != b).collect();
        prop_assume!(!edges.is_empty());
        let m = Matroid::graphic(&edges).unwrap();
        let report = lattice_identity_checks(&m, 16).unwrap();
        prop_assert!(report.passed(), "{}", report);
        let lattice = FlatLattice::new(&m).unwrap();
        let p = lattice.kl_polynomial().unwrap();
        prop_assert_eq!(p.coeff(0), 1);
        if let Some(deg) = p.max_exp() {
            prop_assert!(m.rank() == 0 || 2 * deg < m.rank() as i32);
        }
    }
}
