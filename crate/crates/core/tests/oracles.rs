//! Expansions checked against routes that share no code with the engines
//! under test: explicit-variable expansion, and classical degree formulas.

use chernpos::partition::Partition;
use chernpos::positivity::classical_table;
use chernpos::rings::{GrassmannianRing, LagrangianRing};
use chernpos::schur::oracle::monomial_schur_expansion;
use chernpos::schur::{lr_multiply, lr_oracle, to_schur};
use chernpos::{parse, CPolynomial, SchurExpansion};
use num_bigint::BigInt;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn classical_corpus_matches_monomial_oracle() {
    for e in classical_table() {
        let direct = to_schur(&e.polynomial, None).unwrap();
        let oracle = monomial_schur_expansion(&e.polynomial).unwrap();
        assert_eq!(direct, oracle, "{}", e.name);
    }
}

type Frozen<'a> = (&'a str, &'a [(&'a [u32], i64)]);

#[test]
fn frozen_corpus_expansions() {
    let expected: &[Frozen] = &[
        ("A_3", &[(&[3], 1), (&[2, 1], 5), (&[1, 1, 1], 6)]),
        ("A_4", &[(&[4], 1), (&[3, 1], 9), (&[2, 2], 10), (&[2, 1, 1], 26), (&[1, 1, 1, 1], 24)]),
        (
            "A_5",
            &[
                (&[5], 1),
                (&[4, 1], 14),
                (&[3, 2], 35),
                (&[3, 1, 1], 71),
                (&[2, 2, 1], 92),
                (&[2, 1, 1, 1], 154),
                (&[1, 1, 1, 1, 1], 120),
            ],
        ),
        ("I_{2,2}", &[(&[2, 2], 1)]),
        ("I_{2,3}", &[(&[3, 2], 2), (&[2, 2, 1], 4)]),
        ("I_{2,4}", &[(&[4, 2], 2), (&[3, 3], 5), (&[3, 2, 1], 12), (&[2, 2, 2], 4), (&[2, 2, 1, 1], 16)]),
    ];
    for (entry, (name, terms)) in classical_table().iter().zip(expected) {
        assert_eq!(entry.name, *name);
        let d = entry.polynomial.homogeneous_degree().unwrap().unwrap();
        let want = SchurExpansion::from_terms(d, terms.iter().map(|(l, c)| (p(l), BigInt::from(*c))));
        assert_eq!(monomial_schur_expansion(&entry.polynomial).unwrap(), want, "{name}");
    }
}

#[test]
fn lr_agrees_with_oracle_beyond_the_acceptance_range() {
    for (l, m) in [(&[3, 1][..], &[2, 1, 1][..]), (&[2, 2], &[2, 2]), (&[4], &[3, 1]), (&[2, 1], &[3, 2])] {
        let (l, m) = (p(l), p(m));
        assert_eq!(lr_multiply(&l, &m), lr_oracle(&l, &m, 8).unwrap(), "{l} * {m}");
    }
}

/// `deg Gr(k, n) = (k(n-k))! · Π_{i=1}^{k} (i-1)! / (n-k+i-1)!`.
fn grassmannian_degree(k: usize, n: usize) -> BigInt {
    let fact = |m: usize| (1..=m).fold(BigInt::from(1), |a, b| a * b);
    let mut num = fact(k * (n - k));
    let mut den = BigInt::from(1);
    for i in 1..=k {
        num *= fact(i - 1);
        den *= fact(n - k + i - 1);
    }
    num / den
}

#[test]
fn grassmannian_degrees() {
    for (k, n) in [(1, 3), (2, 4), (2, 5), (2, 6), (3, 6), (3, 7)] {
        let gr = GrassmannianRing::new(k, n).unwrap();
        let top = CPolynomial::c(1).pow(gr.top_degree());
        let deg = gr.integrate(&gr.reduce(&top).unwrap()).unwrap();
        assert_eq!(deg, grassmannian_degree(k, n), "Gr({k},{n})");
    }
}

#[test]
fn lagrangian_grassmannian_degrees() {
    // Plücker degrees of LG(n, 2n): the quadric threefold, then 16 and 768.
    for (n, deg) in [(1, 1), (2, 2), (3, 16), (4, 768)] {
        let lg = LagrangianRing::new(n);
        let top = CPolynomial::c(1).pow(lg.top_degree());
        let got = lg.integrate(&lg.reduce(&top).unwrap()).unwrap();
        assert_eq!(got, BigInt::from(deg), "LG({n})");
    }
}

#[test]
fn symmetric_square_chern_classes() {
    // c(S²E) for rank-2 E: c1 = 3c1, c2 = 2c1² + 4c2.
    use chernpos::positivity::schur_bundle_class;
    let c = CPolynomial::c;
    let c2 = &c(1).pow(2).scale(&2.into()) + &c(2).scale(&4.into());
    let want = to_schur(&c2, Some(2)).unwrap();
    assert_eq!(schur_bundle_class(&p(&[2]), &p(&[1, 1]), 2).unwrap(), want);
    let want = to_schur(&c(1).scale(&3.into()), None).unwrap();
    assert_eq!(schur_bundle_class(&p(&[2]), &p(&[1]), 2).unwrap(), want);
}

#[test]
fn parsed_basis_atoms_match_oracle() {
    let x = monomial_schur_expansion(&parse("s[3,1] + 2*s[2,2]").unwrap().to_polynomial()).unwrap();
    assert_eq!(x, SchurExpansion::from_terms(4, [(p(&[3, 1]), 1.into()), (p(&[2, 2]), 2.into())]));
}
