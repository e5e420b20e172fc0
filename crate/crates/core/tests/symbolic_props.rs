//! Structural properties of the symbolic discriminant and its agreement
//! with the direct univariate computation.

use num_traits::Signed;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sqfbox_core::discriminant::{
    char2_root_monomial, sparse_monomial, squares_monomial, symbolic_discriminant,
    trinomial_identity,
};
use sqfbox_core::{BigInt, Field, UniPoly};

#[test]
fn discriminants_are_homogeneous_and_isobaric() {
    for n in 2..=8usize {
        let disc = symbolic_discriminant(n).unwrap();
        assert!(disc.is_homogeneous(), "n = {n}");
        assert_eq!(disc.total_degree(), Some((2 * n - 2) as u64), "n = {n}");
        let weight = (n * (n - 1)) as u64;
        for (m, _) in disc.terms() {
            let w: u64 = m.exponents().iter().enumerate().map(|(i, &e)| i as u64 * e as u64).sum();
            assert_eq!(w, weight, "isobaric weight at n = {n}");
        }
    }
}

#[test]
fn specialization_agrees_exhaustively_over_gf3() {
    let f3 = Field::new(3, 1).unwrap();
    let elems = f3.enumerate().unwrap();
    for n in 2..=4usize {
        let disc = symbolic_discriminant(n).unwrap();
        let mut checked = 0u64;
        let mut idx = vec![0usize; n + 1];
        loop {
            if idx[n] != 0 {
                // leading coefficient nonzero
                let tuple: Vec<_> = idx.iter().map(|&i| elems[i].clone()).collect();
                let sym = disc.evaluate(&f3, &tuple).unwrap();
                let up = UniPoly::new(&f3, tuple).unwrap().discriminant().unwrap();
                assert_eq!(sym, up, "n = {n}, tuple index {idx:?}");
                checked += 1;
            }
            // odometer
            let mut pos = 0;
            loop {
                if pos > n {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < 3 {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos > n {
                break;
            }
        }
        assert_eq!(checked, 2 * 3u64.pow(n as u32), "n = {n}");
    }
}

#[test]
fn specialization_agrees_on_random_tuples_over_gf5() {
    let f5 = Field::new(5, 1).unwrap();
    let mut rng = StdRng::seed_from_u64(0xD15C);
    for n in 2..=4usize {
        let disc = symbolic_discriminant(n).unwrap();
        for _ in 0..10_000 {
            let mut tuple: Vec<_> =
                (0..=n).map(|_| f5.element_from_index(rng.gen_range(0..5)).unwrap()).collect();
            tuple[n] = f5.element_from_index(rng.gen_range(1..5)).unwrap();
            let sym = disc.evaluate(&f5, &tuple).unwrap();
            let up = UniPoly::new(&f5, tuple).unwrap().discriminant().unwrap();
            assert_eq!(sym, up, "n = {n}");
        }
    }
}

#[test]
fn discriminant_mod_2_is_a_square_containing_the_product_monomial() {
    for n in 2..=7usize {
        let disc = symbolic_discriminant(n).unwrap();
        let root = disc.sqrt_char2().unwrap();
        assert_eq!((&root * &root).reduce_mod(2), disc.reduce_mod(2), "n = {n}");
        assert_eq!(
            root.coefficient(&char2_root_monomial(n)).unwrap(),
            BigInt::from(1),
            "A_1...A_{{n-1}} in the root at n = {n}"
        );
    }
}

#[test]
fn monomial_coefficients_match_closed_forms() {
    for n in 2..=6usize {
        let disc = symbolic_discriminant(n).unwrap();
        let squares = disc.coefficient(&squares_monomial(n)).unwrap();
        assert_eq!(squares.abs(), BigInt::from(1), "all-squares coefficient at n = {n}");
        if n >= 3 {
            let sparse = disc.coefficient(&sparse_monomial(n)).unwrap();
            let expected = BigInt::from((n - 2) as u64).pow((n - 2) as u32);
            assert_eq!(sparse.abs(), expected, "sparse coefficient at n = {n}");
        }
    }
}

#[test]
fn trinomial_identity_holds_with_some_sign_pair() {
    for n in 3..=6usize {
        let (eps, delta) = trinomial_identity(n).unwrap();
        assert!(eps.abs() == 1 && delta.abs() == 1, "n = {n}");
        println!("trinomial identity at n = {n}: eps = {eps}, delta = {delta}");
    }
}
