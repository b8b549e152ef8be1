use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use skewsep::linalg::{self, kernel, snf, solve};
use skewsep::{CoeffRing, Matrix, Submodule};

fn big(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn sub(coeff: CoeffRing, dim: usize, gens: &[&[i64]]) -> Submodule {
    Submodule::from_generators(coeff, dim, gens.iter().map(|g| big(g)).collect()).unwrap()
}

/// All integer vectors of length `dim` with entries in `[-b, b]`.
fn box_vectors(dim: usize, b: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-b..=b).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// All vectors of `(ℤ/n)^dim`.
fn enumerate(dim: usize, n: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..n).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// The subgroup of `(ℤ/n)^dim` generated by `gens`, by closure under addition.
fn closure(gens: &[Vec<i64>], dim: usize, n: i64) -> std::collections::BTreeSet<Vec<i64>> {
    let mut set = std::collections::BTreeSet::new();
    set.insert(vec![0; dim]);
    loop {
        let mut grew = false;
        let current: Vec<Vec<i64>> = set.iter().cloned().collect();
        for v in &current {
            for g in gens {
                let w: Vec<i64> = v.iter().zip(g).map(|(a, b)| (a + b).rem_euclid(n)).collect();
                grew |= set.insert(w);
            }
        }
        if !grew {
            return set;
        }
    }
}

fn members(s: &Submodule, n: i64) -> std::collections::BTreeSet<Vec<i64>> {
    enumerate(s.ambient_dim(), n)
        .into_iter()
        .filter(|v| s.contains_vector(&big(v)).unwrap())
        .collect()
}

#[test]
fn hnf_merges_generators() {
    let gens = [[2, 0], [1, 1], [0, 2]];
    let s = sub(CoeffRing::integers(), 2, &[&gens[0], &gens[1], &gens[2]]);
    assert_eq!(s.basis(), &[big(&[1, 1]), big(&[0, 2])]);
    // each side is a small integer combination of the other
    let basis = [[1, 1], [0, 2]];
    for g in gens {
        assert!(box_vectors(2, 3).iter().any(|c| [c[0], c[0] + 2 * c[1]] == g));
    }
    for h in basis {
        assert!(box_vectors(3, 2)
            .iter()
            .any(|c| { [2 * c[0] + c[1], c[1] + 2 * c[2]] == h }));
    }
    assert_eq!(
        sub(CoeffRing::integers(), 2, &[&[2, 0], &[0, 3]]).basis(),
        &[big(&[2, 0]), big(&[0, 3])]
    );
    assert!(sub(CoeffRing::integers(), 3, &[]).is_zero());
}

#[test]
fn snf_small_cases() {
    let s = snf(&Matrix::from_i64_rows(CoeffRing::integers(), &[&[2, 0], &[0, 3]]));
    assert_eq!(s.diag, big(&[1, 6]));
    let s = snf(&Matrix::identity(CoeffRing::integers(), 3));
    assert_eq!(s.diag, big(&[1, 1, 1]));
    let s = snf(&Matrix::zero(CoeffRing::integers(), 2, 2));
    assert_eq!(s.diag, big(&[0, 0]));
}

#[test]
fn solve_small_cases() {
    let z4 = CoeffRing::modulo(4);
    assert!(solve(&Matrix::from_i64_rows(z4, &[&[2]]), &big(&[1]))
        .unwrap()
        .is_none());

    let id = Matrix::identity(CoeffRing::integers(), 3);
    let (x, k) = solve(&id, &big(&[4, -1, 7])).unwrap().unwrap();
    assert_eq!(x, big(&[4, -1, 7]));
    assert!(k.is_zero());

    // 2a + 3b = 1: extended gcd gives (−1, 1), kernel spanned by (3, −2)
    let m = Matrix::from_i64_rows(CoeffRing::integers(), &[&[2, 3]]);
    let (x, k) = solve(&m, &big(&[1])).unwrap().unwrap();
    assert_eq!(m.mul_vec(&x).unwrap(), big(&[1]));
    assert_eq!(k, sub(CoeffRing::integers(), 2, &[&[3, -2]]));
    let diff: Vec<BigInt> = x.iter().zip(big(&[-1, 1])).map(|(a, b)| a - b).collect();
    assert!(k.contains_vector(&diff).unwrap());
}

#[test]
fn kernel_small_cases() {
    assert!(kernel(&Matrix::identity(CoeffRing::integers(), 3)).is_zero());
    assert!(kernel(&Matrix::zero(CoeffRing::modulo(6), 2, 2)).is_full());
    let k = kernel(&Matrix::from_i64_rows(CoeffRing::modulo(4), &[&[2]]));
    // by enumeration of ℤ/4: 2x ≡ 0 iff x ∈ {0, 2}
    let expected: Vec<Vec<i64>> = (0..4).filter(|x| (2 * x) % 4 == 0).map(|x| vec![x]).collect();
    assert_eq!(members(&k, 4).into_iter().collect::<Vec<_>>(), expected);
}

#[test]
fn intersection_small_cases() {
    let z = CoeffRing::integers();
    let a = sub(z, 2, &[&[1, 1], &[0, 2]]);
    assert_eq!(a.intersect(&Submodule::full(z, 2)).unwrap(), a);
    let e1 = sub(z, 2, &[&[1, 0]]);
    let e2 = sub(z, 2, &[&[0, 1]]);
    assert!(e1.intersect(&e2).unwrap().is_zero());
    // small multiples k(1,1) lying in span{(2,0),(0,1)} are exactly the even k
    let s = sub(z, 2, &[&[2, 0], &[0, 1]]);
    let d = sub(z, 2, &[&[1, 1]]);
    let meet = s.intersect(&d).unwrap();
    for k in -6i64..=6 {
        assert_eq!(meet.contains_vector(&big(&[k, k])).unwrap(), k % 2 == 0);
    }
    assert_eq!(meet, sub(z, 2, &[&[2, 2]]));
}

#[test]
fn dimension_mismatch_is_an_error() {
    let z = CoeffRing::integers();
    let a = Submodule::full(z, 2);
    let b = Submodule::full(z, 3);
    assert!(a.intersect(&b).is_err());
    assert!(a.contains(&b).is_err());
    assert!(a.contains_vector(&big(&[1])).is_err());
    assert!(Submodule::full(CoeffRing::modulo(2), 2).contains(&a).is_err());
}

fn small_matrix(max_dim: usize, range: i64) -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1..=max_dim, 1..=max_dim)
        .prop_flat_map(move |(r, c)| (Just(r), Just(c), proptest::collection::vec(-range..=range, r * c)))
}

fn to_matrix(coeff: CoeffRing, r: usize, c: usize, xs: &[i64]) -> Matrix {
    Matrix::new(coeff, r, c, big(xs)).unwrap()
}

fn modulus() -> impl Strategy<Value = u64> {
    prop_oneof![Just(0u64), Just(2u64), Just(3u64), Just(4u64), Just(6u64)]
}

proptest! {
    #[test]
    fn hnf_is_idempotent((r, c, xs) in small_matrix(4, 9), n in modulus()) {
        let coeff = CoeffRing::new(n).unwrap();
        let s = linalg::image(&to_matrix(coeff, r, c, &xs).transpose());
        let again = Submodule::from_generators(coeff, s.ambient_dim(), s.basis().to_vec()).unwrap();
        prop_assert_eq!(&again, &s);
        let from_gens = Submodule::from_generators(coeff, s.ambient_dim(), s.generators()).unwrap();
        prop_assert_eq!(from_gens, s);
    }

    #[test]
    fn snf_diagonalizes((r, c, xs) in small_matrix(4, 9), n in modulus()) {
        let coeff = CoeffRing::new(n).unwrap();
        let m = to_matrix(coeff, r, c, &xs);
        let s = snf(&m);
        let d = s.u.mul(&m).unwrap().mul(&s.vt).unwrap();
        prop_assert!(d.is_diagonal());
        for i in 0..r.min(c) {
            prop_assert_eq!(d.get(i, i), &s.diag[i]);
        }
        for w in s.diag.windows(2) {
            if coeff.is_integers() {
                prop_assert!(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()));
            }
        }
        prop_assert!(coeff.is_unit(&s.u.det().unwrap()));
        prop_assert!(coeff.is_unit(&s.vt.det().unwrap()));
    }

    #[test]
    fn integer_kernel_matches_box_search((r, c, xs) in small_matrix(3, 4)) {
        let m = to_matrix(CoeffRing::integers(), r, c, &xs);
        let k = kernel(&m);
        for g in k.generators() {
            prop_assert!(m.mul_vec(&g).unwrap().iter().all(Zero::is_zero));
        }
        for v in box_vectors(c, 3) {
            let image_zero = m.mul_vec(&big(&v)).unwrap().iter().all(Zero::is_zero);
            prop_assert_eq!(k.contains_vector(&big(&v)).unwrap(), image_zero);
        }
    }

    #[test]
    fn modular_kernel_matches_enumeration((r, c, xs) in small_matrix(3, 5), n in prop_oneof![Just(2i64), Just(4), Just(6)]) {
        let coeff = CoeffRing::modulo(n as u64);
        let m = to_matrix(coeff, r, c, &xs);
        let k = kernel(&m);
        let expected: std::collections::BTreeSet<Vec<i64>> = enumerate(c, n)
            .into_iter()
            .filter(|v| m.mul_vec(&big(v)).unwrap().iter().all(Zero::is_zero))
            .collect();
        prop_assert_eq!(members(&k, n), expected);
    }

    #[test]
    fn modular_intersection_matches_enumeration(
        a in proptest::collection::vec(proptest::collection::vec(0i64..6, 3), 0..3),
        b in proptest::collection::vec(proptest::collection::vec(0i64..6, 3), 0..3),
    ) {
        let n = 6;
        let coeff = CoeffRing::modulo(n as u64);
        let sa = Submodule::from_generators(coeff, 3, a.iter().map(|g| big(g)).collect()).unwrap();
        let sb = Submodule::from_generators(coeff, 3, b.iter().map(|g| big(g)).collect()).unwrap();
        let ca = closure(&a, 3, n);
        let cb = closure(&b, 3, n);
        prop_assert_eq!(members(&sa, n), ca.clone());
        let meet: std::collections::BTreeSet<Vec<i64>> = ca.intersection(&cb).cloned().collect();
        prop_assert_eq!(members(&sa.intersect(&sb).unwrap(), n), meet);
        prop_assert_eq!(sa.contains(&sb).unwrap(), cb.is_subset(&ca));
        prop_assert_eq!(sa.cardinality().unwrap(), BigInt::from(ca.len()));
    }

    #[test]
    fn solve_returns_a_solution((r, c, xs) in small_matrix(3, 6), x in proptest::collection::vec(-5i64..=5, 3), n in modulus()) {
        let coeff = CoeffRing::new(n).unwrap();
        let m = to_matrix(coeff, r, c, &xs);
        let b = m.mul_vec(&big(&x[..c])).unwrap();
        let (p, k) = solve(&m, &b).unwrap().expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&p).unwrap(), b);
        prop_assert_eq!(k, kernel(&m));
    }

    #[test]
    fn inverse_round_trip(c in 1usize..=3, xs in proptest::collection::vec(-4i64..=4, 9), n in modulus()) {
        let coeff = CoeffRing::new(n).unwrap();
        let m = to_matrix(coeff, c, c, &xs[..c * c]);
        let det = m.det().unwrap();
        match linalg::inverse(&m) {
            Some(inv) => {
                prop_assert!(coeff.is_unit(&det));
                prop_assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(coeff, c));
            }
            None => prop_assert!(!coeff.is_unit(&det)),
        }
    }
}

#[test]
fn integer_pivots_are_positive_and_reduced() {
    let s = sub(CoeffRing::integers(), 3, &[&[4, 6, -2], &[-2, 3, 5], &[6, 0, 0]]);
    let basis = s.basis();
    let mut last = None;
    for row in basis {
        let p = row.iter().position(|x| !x.is_zero()).unwrap();
        assert!(row[p].is_positive());
        assert!(last.is_none_or(|l| p > l));
        last = Some(p);
    }
    for (i, row) in basis.iter().enumerate() {
        let p = row.iter().position(|x| !x.is_zero()).unwrap();
        for above in &basis[..i] {
            assert!(!above[p].is_negative() && above[p] < row[p]);
        }
    }
    assert!(s.contains_vector(&big(&[4, 6, -2])).unwrap());
}
