//! Randomized property suites: ring axioms on small polynomials,
//! substitution/evaluation compatibility, canonical-form uniqueness, and
//! serialization round-trips.

use filiform::exactalg::{parse_poly, Monomial, Polynomial, Rational, VarId};
use filiform::liecore::BilinearMap;
use proptest::prelude::*;
use std::collections::BTreeMap;

/// Deterministic small-polynomial generator (fixed-seed LCG).
struct Gen {
    state: u64,
}

impl Gen {
    fn new(seed: u64) -> Self {
        Gen {
            state: seed
                .wrapping_mul(2862933555777941757)
                .wrapping_add(3037000493),
        }
    }

    fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.state >> 11
    }

    fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next_u64() % ((hi - lo + 1) as u64)) as i64
    }

    /// Random polynomial in up to 4 variables, total degree <= 3.
    fn poly(&mut self) -> Polynomial {
        let vars = [
            VarId::param(1, 4),
            VarId::param(2, 6),
            VarId::entry(1, 1),
            VarId::Time,
        ];
        let mut out = Polynomial::zero();
        let terms = self.int(0, 5);
        for _ in 0..terms {
            let mut pairs = Vec::new();
            let mut degree_left = 3i64;
            for &v in &vars {
                let e = self.int(0, degree_left.min(2));
                degree_left -= e;
                if e > 0 {
                    pairs.push((v, e as u32));
                }
            }
            let coeff = Rational::new(self.int(-6, 6), self.int(1, 4));
            out.add_term(Monomial::from_pairs(pairs), coeff);
        }
        out
    }
}

#[test]
fn ring_axioms_on_random_triples() {
    let mut g = Gen::new(42);
    for _ in 0..1000 {
        let p = g.poly();
        let q = g.poly();
        let r = g.poly();
        assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        assert_eq!(&p * &q, &q * &p);
        assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }
}

#[test]
fn substitution_commutes_with_evaluation() {
    let mut g = Gen::new(7);
    let vars = [
        VarId::param(1, 4),
        VarId::param(2, 6),
        VarId::entry(1, 1),
        VarId::Time,
    ];
    for _ in 0..300 {
        let p = g.poly();
        // bindings for two of the variables, a full point for the rest
        let mut bindings: BTreeMap<VarId, Polynomial> = BTreeMap::new();
        bindings.insert(vars[0], g.poly());
        bindings.insert(vars[3], g.poly());
        let mut point: BTreeMap<VarId, Rational> = BTreeMap::new();
        for &v in &vars {
            point.insert(v, Rational::new(g.int(-3, 3), g.int(1, 3)));
        }
        // point' binds each substituted variable to the value of its image
        let mut point2 = point.clone();
        for (v, image) in &bindings {
            point2.insert(*v, image.eval(&point).unwrap());
        }
        let lhs = p.substitute(&bindings).eval(&point).unwrap();
        let rhs = p.eval(&point2).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn canonical_string_uniqueness() {
    let mut g = Gen::new(99);
    for _ in 0..500 {
        let p = g.poly();
        let q = g.poly();
        assert_eq!(p == q, p.to_string() == q.to_string());
        assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }
}

proptest! {
    /// Parsing the canonical text form is the inverse of printing.
    #[test]
    fn parse_display_roundtrip(coeffs in proptest::collection::vec(-9i64..=9, 1..6)) {
        let vars = [VarId::param(1, 4), VarId::param(3, 8), VarId::entry(3, 2), VarId::Time];
        let mut p = Polynomial::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            let v = vars[i % vars.len()];
            let e = (i % 3 + 1) as u32;
            p.add_term(Monomial::var(v).pow(e), Rational::from(c));
        }
        let text = p.to_string();
        prop_assert_eq!(parse_poly(&text).unwrap(), p);
    }

    /// Bilinear-map JSON round-trips bit-exactly.
    #[test]
    fn bilinear_map_json_roundtrip(entries in proptest::collection::vec((0u8..5, 0u8..5, 0u8..5, -5i64..=5), 0..8)) {
        let mut m = BilinearMap::zero(5);
        for (i, j, k, c) in entries {
            if i == j || c == 0 {
                continue;
            }
            m.add_entry(i.min(j), j.max(i), k, Polynomial::int(c));
        }
        let json = serde_json::to_string(&m).unwrap();
        let back: BilinearMap = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    /// Rational literals round-trip through their canonical form.
    #[test]
    fn rational_roundtrip(n in -1000i64..1000, d in 1i64..200) {
        let r = Rational::new(n, d);
        let s = r.to_string();
        prop_assert_eq!(s.parse::<Rational>().unwrap(), r);
    }
}

#[test]
fn bilinear_apply_is_alternating() {
    let mut g = Gen::new(123);
    for trial in 0..50 {
        let mut m = BilinearMap::zero(6);
        for i in 0..6u8 {
            for j in (i + 1)..6u8 {
                for k in 0..6u8 {
                    let c = g.int(-3, 3);
                    if c != 0 {
                        m.add_entry(i, j, k, Polynomial::int(c));
                    }
                }
            }
        }
        let u: Vec<Polynomial> = (0..6).map(|_| Polynomial::int(g.int(-4, 4))).collect();
        let v: Vec<Polynomial> = (0..6).map(|_| Polynomial::int(g.int(-4, 4))).collect();
        let uv = m.apply(&u, &v);
        let vu = m.apply(&v, &u);
        for (a, b) in uv.iter().zip(vu.iter()) {
            assert_eq!(*a, -b, "alternation violated in trial {trial}");
        }
        // value(j, i) = -value(i, j) across direct coefficient reads
        for i in 0..6u8 {
            for j in 0..6u8 {
                for k in 0..6u8 {
                    assert_eq!(m.coeff(i, j, k), -&m.coeff(j, i, k));
                }
            }
        }
    }
}
