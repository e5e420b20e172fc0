//! Soundness, completeness-under-guarantee, and determinism of the
//! squarefree witness search over coefficient boxes.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sqfbox_core::discriminant::symbolic_discriminant;
use sqfbox_core::nullstellensatz::{
    applies, classify, find_nonvanishing, find_squarefree, search_squarefree, CoeffBox,
    GuaranteeKind,
};
use sqfbox_core::{Field, FieldElement, UniPoly};

/// A random nonempty subset of the field, as sorted canonical elements.
fn random_subset(field: &Field, rng: &mut StdRng) -> Vec<FieldElement> {
    let elems = field.enumerate().unwrap();
    loop {
        let picked: Vec<_> = elems.iter().filter(|_| rng.gen_bool(0.4)).cloned().collect();
        if !picked.is_empty() {
            return picked;
        }
    }
}

#[test]
fn witnesses_are_sound_on_random_boxes() {
    for (p, k) in [(2u64, 1usize), (3, 1), (5, 1), (2, 2)] {
        let field = Field::new(p, k).unwrap();
        let mut rng = StdRng::seed_from_u64(0xB0C5 + p * 10 + k as u64);
        for n in 2..=4usize {
            for _ in 0..150 {
                let sets: Vec<_> = (0..=n).map(|_| random_subset(&field, &mut rng)).collect();
                let b = CoeffBox::new(&field, sets).unwrap();
                let out = search_squarefree(&b).unwrap();
                if out.guarantee.is_some() {
                    assert!(
                        out.witness.is_some(),
                        "guarantee without witness on {b} over GF({p}^{k})"
                    );
                }
                if let Some(w) = out.witness {
                    for (a, s) in w.tuple.iter().zip(b.sets()) {
                        assert!(s.contains(a), "witness coefficient outside its set");
                    }
                    let poly = UniPoly::new(&field, w.tuple).unwrap();
                    assert!(poly.is_squarefree_exhaustive().unwrap(), "oracle rejects {poly}");
                    if let Some(d) = w.disc_value {
                        assert!(!d.is_zero());
                        assert_eq!(d, poly.discriminant().unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn all_minimal_general_boxes_over_gf3_have_witnesses() {
    // n = 2 over GF(3): S_0 any singleton, S_1 the full field, S_2 a
    // nonzero singleton — six boxes, each guaranteed and each satisfied.
    let f3 = Field::new(3, 1).unwrap();
    let elems = f3.enumerate().unwrap();
    let mut count = 0;
    for a0 in &elems {
        for a2 in &elems {
            if a2.is_zero() {
                continue;
            }
            let b = CoeffBox::new(
                &f3,
                vec![vec![a0.clone()], elems.clone(), vec![a2.clone()]],
            )
            .unwrap();
            let out = find_squarefree(&b).unwrap();
            assert_eq!(out.guarantee.as_ref().unwrap().kind, GuaranteeKind::General);
            assert!(out.witness.is_some(), "no witness in {b}");
            count += 1;
        }
    }
    assert_eq!(count, 6);
}

#[test]
fn all_minimal_char2_boxes_at_cubic_degree_have_witnesses() {
    // Over GF(2) with n = 3 the minimal covered boxes are
    // S_0 in {{0},{1}}, S_1 = S_2 = {0,1}, S_3 = {1} — exactly two.
    let f2 = Field::new(2, 1).unwrap();
    let both = f2.enumerate().unwrap();
    let mut count = 0;
    for a0 in &both {
        let b = CoeffBox::new(
            &f2,
            vec![vec![a0.clone()], both.clone(), both.clone(), vec![f2.one()]],
        )
        .unwrap();
        let out = find_squarefree(&b).unwrap();
        assert_eq!(out.guarantee.as_ref().unwrap().kind, GuaranteeKind::Char2);
        assert!(out.witness.is_some(), "no witness in {b}");
        count += 1;
    }
    assert_eq!(count, 2);
}

#[test]
fn classified_guarantees_certify_through_the_nullstellensatz() {
    // Whenever classify reports a guarantee, the certifying monomial must
    // pass the applicability test against the right polynomial (the
    // discriminant, or its square root in characteristic 2), and a
    // nonvanishing point must exist in the box.
    let cases: Vec<(u64, usize, usize)> =
        vec![(3, 1, 2), (3, 1, 3), (5, 1, 3), (2, 1, 3), (2, 1, 4), (2, 2, 3), (7, 1, 4)];
    for (p, k, n) in cases {
        let field = Field::new(p, k).unwrap();
        let mut rng = StdRng::seed_from_u64(0xCE57 + p + n as u64);
        let disc = symbolic_discriminant(n).unwrap();
        let root = disc.sqrt_char2().unwrap();
        let mut guaranteed = 0;
        for _ in 0..200 {
            let sets: Vec<_> = (0..=n).map(|_| random_subset(&field, &mut rng)).collect();
            let b = CoeffBox::new(&field, sets).unwrap();
            let Some(g) = classify(&b) else { continue };
            guaranteed += 1;
            let certifier = match g.kind {
                GuaranteeKind::Char2 => &root,
                _ => &disc,
            };
            assert!(
                applies(certifier, &g.monomial, &b).unwrap(),
                "classified monomial fails applicability on {b} over GF({p}^{k})"
            );
            let hit = find_nonvanishing(certifier, &b).unwrap();
            assert!(hit.is_some(), "no nonvanishing point in {b} over GF({p}^{k})");
            let out = search_squarefree(&b).unwrap();
            assert!(out.witness.is_some());
        }
        assert!(guaranteed > 0, "sampling produced no guaranteed boxes at GF({p}^{k}), n = {n}");
    }
}

#[test]
fn search_is_deterministic() {
    let f5 = Field::new(5, 1).unwrap();
    let mut rng = StdRng::seed_from_u64(0xDE7);
    for _ in 0..50 {
        let sets: Vec<_> = (0..=3).map(|_| random_subset(&f5, &mut rng)).collect();
        let b = CoeffBox::new(&f5, sets).unwrap();
        let first = search_squarefree(&b).unwrap();
        let second = search_squarefree(&b).unwrap();
        assert_eq!(first, second);
    }
}
