//! Built-in identity suites run by `hypalg verify`.

use hypalg_core::cayley::sym;
use hypalg_core::lorentz::{commutator, generators};
use hypalg_core::{HyperComplex, Multivector};

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub total: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn line(&self) -> String {
        let ok = self.total - self.failures.len();
        let status = if self.passed() { "ok" } else { "FAIL" };
        let mut s = format!("{}: {ok}/{} {status}", self.name, self.total);
        for f in &self.failures {
            s.push_str("\n  ");
            s.push_str(f);
        }
        s
    }
}

fn sign_of(image: Multivector, a: Multivector) -> Option<char> {
    if image == a {
        Some('+')
    } else if image == -a {
        Some('-')
    } else {
        None
    }
}

/// Conjugation, reversion and grade-involution signs on the named units.
pub fn involution_table() -> SuiteReport {
    let e = |k| Multivector::e(k).unwrap();
    let s = |k| Multivector::sigma(k).unwrap();
    let rows: Vec<(String, Multivector, [char; 3])> = vec![
        ("e0".into(), e(0), ['+', '+', '+']),
        ("e1".into(), e(1), ['-', '+', '-']),
        ("e2".into(), e(2), ['-', '+', '-']),
        ("e3".into(), e(3), ['-', '+', '-']),
        ("s1".into(), s(1), ['+', '+', '+']),
        ("s2".into(), s(2), ['+', '+', '+']),
        ("s3".into(), s(3), ['+', '+', '+']),
        ("i".into(), Multivector::I, ['-', '-', '+']),
        ("j".into(), Multivector::J, ['-', '+', '-']),
    ];
    let mut failures = Vec::new();
    let mut total = 0;
    for (name, a, want) in rows {
        let got = [a.bar(), a.dagger(), a.hat()];
        for ((op, image), w) in ["bar", "dagger", "hat"].iter().zip(got).zip(want) {
            total += 1;
            let sign = sign_of(image, a);
            if sign != Some(w) {
                failures.push(format!("{op}({name}): expected {w}, got {}", sign.map_or("?".into(), String::from)));
            }
        }
    }
    SuiteReport { name: "involutions", total, failures }
}

/// `e_μ · e_ν = diag(1, -1, -1, -1)`, exactly.
pub fn metric() -> SuiteReport {
    let mut failures = Vec::new();
    for mu in 0..4 {
        for nu in 0..4 {
            let g = if mu != nu {
                0.0
            } else if mu == 0 {
                1.0
            } else {
                -1.0
            };
            let got = sym(Multivector::e(mu).unwrap(), Multivector::e(nu).unwrap());
            if got != Multivector::real(g) {
                failures.push(format!("e{mu}.e{nu}: expected {g}, got {got:?}"));
            }
        }
    }
    SuiteReport { name: "metric", total: 16, failures }
}

fn levi_civita(a: usize, b: usize, c: usize) -> f64 {
    ((b as f64 - a as f64) * (c as f64 - a as f64) * (c as f64 - b as f64)) / 2.0
}

/// `[J_a, J_b] = iε J_c`, `[J_a, K_b] = iε K_c`, `[K_a, K_b] = -iε J_c` to 1e-14.
pub fn lie_brackets() -> SuiteReport {
    let (j, k) = generators();
    let mut failures = Vec::new();
    let mut total = 0;
    for a in 0..3 {
        for b in 0..3 {
            let mut jj = Multivector::ZERO;
            let mut jk = Multivector::ZERO;
            for c in 0..3 {
                let i_eps = HyperComplex::new(0.0, levi_civita(a, b, c), 0.0, 0.0);
                jj += j[c] * i_eps;
                jk += k[c] * i_eps;
            }
            let cases = [
                ("[J,J]", commutator(j[a], j[b]), jj),
                ("[J,K]", commutator(j[a], k[b]), jk),
                ("[K,K]", commutator(k[a], k[b]), -jj),
            ];
            for (name, got, want) in cases {
                total += 1;
                if !got.approx_eq(want, 1e-14) {
                    failures.push(format!("{name} a={} b={}", a + 1, b + 1));
                }
            }
        }
    }
    SuiteReport { name: "lie", total, failures }
}

pub fn all() -> Vec<SuiteReport> {
    vec![involution_table(), metric(), lie_brackets()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass() {
        for r in all() {
            assert!(r.passed(), "{}", r.line());
        }
    }

    #[test]
    fn levi_civita_values() {
        assert_eq!(levi_civita(0, 1, 2), 1.0);
        assert_eq!(levi_civita(1, 0, 2), -1.0);
        assert_eq!(levi_civita(2, 0, 1), 1.0);
        assert_eq!(levi_civita(1, 1, 2), 0.0);
    }
}
