#![allow(dead_code)]

use mstep::{Matrix, Rational, SequenceSpec};
use rand::Rng;

/// Laplace expansion along the first row. Exponential, fine up to 6x6.
pub fn cofactor_det(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    match n {
        0 => Rational::one(),
        1 => rows[0][0].clone(),
        _ => {
            let mut total = Rational::zero();
            for col in 0..n {
                if rows[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Rational>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &rows[0][col] * &cofactor_det(&minor);
                total = if col % 2 == 0 { total + term } else { total - term };
            }
            total
        }
    }
}

pub fn cofactor_det_matrix(m: &Matrix) -> Rational {
    cofactor_det(&m.to_rows())
}

/// Rational in `[-bound, bound]` with denominator at most `max_den`.
pub fn rational_in<R: Rng>(rng: &mut R, bound: i64, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(-bound * den..=bound * den);
    Rational::new(num, den).unwrap()
}

pub fn nonzero_rational_in<R: Rng>(rng: &mut R, bound: i64, max_den: i64) -> Rational {
    loop {
        let r = rational_in(rng, bound, max_den);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Random order-`m` spec with `r_m != 0`.
pub fn random_spec<R: Rng>(rng: &mut R, m: usize, bound: i64, max_den: i64) -> SequenceSpec {
    let mut coefficients: Vec<Rational> = (0..m - 1).map(|_| rational_in(rng, bound, max_den)).collect();
    coefficients.push(nonzero_rational_in(rng, bound, max_den));
    let initials = (0..m).map(|_| rational_in(rng, bound, max_den)).collect();
    SequenceSpec::new(coefficients, initials, None).unwrap()
}
