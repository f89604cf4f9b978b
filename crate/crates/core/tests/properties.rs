use std::collections::BTreeSet;

use monosig::harness::format::{
    parse_ideal, parse_matrix, serialize_ideal, serialize_matrix, serialize_symbolic,
};
use monosig::harness::invariant_report;
use monosig::signature::{is_tight, signature_matrix};
use monosig::{
    betti_table, enumerate_signature_matrices, height, row_signature, signature_of_ideal, Field,
    IncidenceMatrix, Monomial, MonomialIdeal,
};
use proptest::prelude::*;

fn monomials(n: usize, max_q: usize, max_e: u32) -> impl Strategy<Value = Vec<Monomial>> {
    prop::collection::vec(
        prop::collection::vec(0..=max_e, n).prop_map(Monomial::new),
        1..=max_q,
    )
}

/// Random ideals in 1..=4 variables with up to 5 generators of exponent <= 6.
fn ideals() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4).prop_flat_map(|n| {
        monomials(n, 5, 6).prop_map(move |g| MonomialIdeal::minimalize(n, g).unwrap())
    })
}

fn proper_ideals() -> impl Strategy<Value = MonomialIdeal> {
    ideals().prop_filter("proper", |i| !i.is_unit())
}

/// Squarefree non-principal ideals whose every variable has a zero in some
/// generator.
fn squarefree_height_two_ideals() -> impl Strategy<Value = MonomialIdeal> {
    (2usize..=4)
        .prop_flat_map(|n| {
            monomials(n, 5, 1).prop_map(move |g| MonomialIdeal::minimalize(n, g).unwrap())
        })
        .prop_filter("ht >= 2", |i| {
            !i.is_unit() && !i.is_principal() && i.every_row_has_zero()
        })
}

fn in_ideal(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(m))
}

/// Every exponent vector below `bound` componentwise.
fn box_points(bound: &[u32]) -> Vec<Monomial> {
    let mut pts = vec![Vec::new()];
    for &b in bound {
        pts = pts
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=b).map(move |e| {
                    let mut p = p.clone();
                    p.push(e);
                    p
                })
            })
            .collect();
    }
    pts.into_iter().map(Monomial::new).collect()
}

fn rank_rows(rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    rows.iter()
        .map(|r| {
            let distinct: BTreeSet<u32> = r.iter().copied().collect();
            r.iter()
                .map(|x| distinct.range(..x).count() as u32)
                .collect()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn minimalize_is_idempotent_and_order_free(
        (n, gens) in (1usize..=4).prop_flat_map(|n| (Just(n), monomials(n, 6, 4)))
    ) {
        let i = MonomialIdeal::minimalize(n, gens.clone()).unwrap();
        let again = MonomialIdeal::minimalize(n, i.generators().to_vec()).unwrap();
        prop_assert_eq!(&again, &i);
        let mut rev = gens.clone();
        rev.reverse();
        prop_assert_eq!(MonomialIdeal::minimalize(n, rev).unwrap(), i.clone());
        for g in &gens {
            prop_assert!(in_ideal(i.generators(), g));
        }
    }

    #[test]
    fn colon_matches_membership_in_box(i in proper_ideals(), m in prop::collection::vec(0u32..=4, 4)) {
        let n = i.n();
        let m = Monomial::new(m[..n].to_vec());
        let c = i.colon(&m).unwrap();
        prop_assert!(c.contains_ideal(&i));
        let bound: Vec<u32> = i.lcm_of_generators().exponents().iter().zip(m.exponents()).map(|(a, b)| a + b).collect();
        for p in box_points(&bound) {
            let prod = p.checked_mul(&m).unwrap();
            prop_assert_eq!(c.contains(&p).unwrap(), in_ideal(i.generators(), &prod));
        }
    }

    #[test]
    fn gcd_factor_reassembles(i in proper_ideals()) {
        let (f, l) = i.gcd_factor().unwrap();
        prop_assert_eq!(l.scale(&f).unwrap(), i.clone());
        if !i.is_principal() {
            prop_assert!(l.every_row_has_zero());
            prop_assert!(height(&l).unwrap() >= 2);
        }
    }

    #[test]
    fn product_is_intersection_iff_colon_is_trivial(l in proper_ideals(), f in prop::collection::vec(0u32..=2, 4)) {
        let n = l.n();
        let f = Monomial::new(f[..n].to_vec());
        let principal = MonomialIdeal::minimalize(n, [f.clone()]).unwrap();
        let product = l.scale(&f).unwrap();
        let meet = principal.intersect(&l).unwrap();
        prop_assert_eq!(product == meet, l.colon(&f).unwrap() == l);
    }

    #[test]
    fn row_signature_is_idempotent(row in prop::collection::vec(0u32..=9, 1..=6)) {
        let s = row_signature(&row).unwrap();
        let again = row_signature(&s.positions).unwrap();
        prop_assert_eq!(&again.positions, &s.positions);
        prop_assert!(again.tight);
    }

    #[test]
    fn signature_matrix_ranks_entries(i in proper_ideals()) {
        let a = i.incidence_matrix().unwrap();
        let s = signature_matrix(&a);
        prop_assert_eq!(s.row_vecs(), rank_rows(&a.row_vecs()));
        prop_assert!(is_tight(&s));
    }

    #[test]
    fn signature_is_idempotent(i in proper_ideals()) {
        let s = signature_of_ideal(&i).unwrap();
        if !s.is_unit() {
            prop_assert_eq!(signature_of_ideal(&s).unwrap(), s);
        } else {
            prop_assert!(i.is_principal());
        }
    }

    #[test]
    fn signature_is_scale_invariant(i in proper_ideals(), v in 0usize..4) {
        let v = v % i.n();
        let scaled = i.scale(&Monomial::var(i.n(), v)).unwrap();
        prop_assert_eq!(signature_of_ideal(&scaled).unwrap(), signature_of_ideal(&i).unwrap());
    }

    #[test]
    fn signature_has_height_at_least_two(i in proper_ideals()) {
        prop_assume!(!i.is_principal());
        let s = signature_of_ideal(&i).unwrap();
        prop_assert!(s.every_row_has_zero());
        prop_assert!(height(&s).unwrap() >= 2);
    }

    #[test]
    fn squarefree_height_two_is_its_own_signature(i in squarefree_height_two_ideals()) {
        prop_assert_eq!(signature_of_ideal(&i).unwrap(), i);
    }

    #[test]
    fn ideal_document_round_trips(i in proper_ideals()) {
        let text = serialize_ideal(&i);
        let back = parse_ideal(&text).unwrap();
        prop_assert_eq!(&back, &i);
        prop_assert_eq!(serialize_ideal(&back), text);
        prop_assert_eq!(parse_ideal(&serialize_symbolic(&i)).unwrap(), i);
    }

    #[test]
    fn matrix_document_round_trips(i in proper_ideals()) {
        let a = i.incidence_matrix().unwrap();
        let back = parse_matrix(&serialize_matrix(&a)).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_ideal(), i);
    }

    #[test]
    fn report_is_consistent(i in proper_ideals(), p in prop::sample::select(vec![Field::Rationals, Field::Prime(2)])) {
        let r = invariant_report(&i, p, None).unwrap();
        prop_assert!(r.is_consistent());
    }
}

/// Brute force: every `n x q` matrix over `0..q`, kept when rows are tight
/// and non-constant and columns are pairwise incomparable, modulo column
/// order.
fn brute_signature_classes(n: usize, q: usize) -> BTreeSet<Vec<Vec<u32>>> {
    let cells = n * q;
    let total = (q as u64).pow(cells as u32);
    let mut out = BTreeSet::new();
    for code in 0..total {
        let mut c = code;
        let mut rows = vec![vec![0u32; q]; n];
        for cell in 0..cells {
            rows[cell / q][cell % q] = (c % q as u64) as u32;
            c /= q as u64;
        }
        let ok_rows = rows.iter().all(|r| {
            let d: BTreeSet<u32> = r.iter().copied().collect();
            d.len() > 1 && d.iter().copied().eq(0..d.len() as u32)
        });
        if !ok_rows {
            continue;
        }
        let mut cols: Vec<Vec<u32>> = (0..q)
            .map(|j| rows.iter().map(|r| r[j]).collect())
            .collect();
        let le = |a: &Vec<u32>, b: &Vec<u32>| a.iter().zip(b).all(|(x, y)| x <= y);
        let antichain = (0..q).all(|a| (0..q).all(|b| a == b || !le(&cols[a], &cols[b])));
        if antichain {
            cols.sort();
            out.insert(cols);
        }
    }
    out
}

fn columns_sorted(a: &IncidenceMatrix) -> Vec<Vec<u32>> {
    let mut cols: Vec<Vec<u32>> = a.columns().iter().map(|c| c.exponents().to_vec()).collect();
    cols.sort();
    cols
}

#[test]
fn enumeration_matches_brute_force() {
    for (n, q) in [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3), (2, 4)] {
        let got: Vec<Vec<Vec<u32>>> = enumerate_signature_matrices(n, q)
            .iter()
            .map(columns_sorted)
            .collect();
        let set: BTreeSet<_> = got.iter().cloned().collect();
        assert_eq!(set.len(), got.len(), "duplicates for ({n}, {q})");
        assert_eq!(set, brute_signature_classes(n, q), "({n}, {q})");
        assert!((got.len() as u64) <= (q as u64).pow((n * q) as u32));
    }
}

#[test]
fn enumeration_of_single_generator_is_unit_class() {
    for n in 1..=4 {
        let e = enumerate_signature_matrices(n, 1);
        assert_eq!(e.len(), 1);
        assert!(e[0].to_ideal().is_unit());
    }
}

#[test]
fn enumeration_contains_list_3x3() {
    let all: BTreeSet<_> = enumerate_signature_matrices(3, 3)
        .iter()
        .map(columns_sorted)
        .collect();
    for a in monosig::harness::corpus::list_3x3() {
        assert!(all.contains(&columns_sorted(&a)));
    }
}

#[test]
fn betti_numbers_of_a_prime_are_binomial() {
    for k in 1..=4usize {
        let p = MonomialIdeal::prime(4, &(0..k).collect::<Vec<_>>());
        for field in [Field::Rationals, Field::Prime(3)] {
            let t = betti_table(&p, field).unwrap();
            let mut binom = 1u64;
            for i in 0..=k {
                assert_eq!(t.total(i), binom, "k={k}, i={i}");
                binom = binom * (k - i) as u64 / (i + 1) as u64;
            }
        }
    }
}
