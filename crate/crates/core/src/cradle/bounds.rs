use num_bigint::BigUint;
use num_traits::{One, Pow};

/// `Γ(c, 1, h) = 2c`, `Γ(c, d, h) = 2c(h + (c+1)^(c+1) Γ(c, d-1, h))`.
///
/// # Panics
/// If any argument is zero.
pub fn gamma_bound(c: usize, d: usize, h: &BigUint) -> BigUint {
    assert!(c >= 1 && d >= 1, "gamma_bound needs c, d >= 1");
    let two_c = BigUint::from(2 * c);
    let step = Pow::pow(BigUint::from(c + 1), c as u32 + 1);
    let mut g = two_c.clone();
    for _ in 1..d {
        g = &two_c * (h + &step * &g);
    }
    g
}

/// `Φ(c, h, t) = t Γ(c, c, h)`.
pub fn phi_bound(c: usize, h: &BigUint, t: usize) -> BigUint {
    BigUint::from(t) * gamma_bound(c, c, h)
}

/// `Ψ(1) = 1`, `Ψ(c) = Φ(c, Ψ(c-1), 2c+1)`; `Ψ(0)` is taken as 1 as well.
pub fn psi_p5_bound(c: usize) -> BigUint {
    let mut psi = BigUint::one();
    for k in 2..=c {
        psi = phi_bound(k, &psi, 2 * k + 1);
    }
    psi
}
