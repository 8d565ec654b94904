use num_bigint::BigUint;
use num_traits::{One, Pow};

fn pow(c: usize, e: usize) -> BigUint {
    Pow::pow(BigUint::from(c), e)
}

/// `ω^s`, the degree bound for `K_{1,s}`-free graphs.
pub fn psi_star_bound(c: usize, s: usize) -> BigUint {
    pow(c, s)
}

/// `Ψ(c, s, 0) = c^s`, `Ψ(1, s, t) = 1`,
/// `Ψ(c, s, t) = tΨ(c-1, s, t) + (s+1)Ψ(c, s, t-1)`.
pub fn psi_sst_bound(c: usize, s: usize, t: usize) -> BigUint {
    let c = c.max(1);
    // row[t'] holds Ψ(c', s, t') for the current c'.
    let mut row: Vec<BigUint> = vec![BigUint::one(); t + 1];
    for cc in 2..=c {
        let mut next = Vec::with_capacity(t + 1);
        next.push(pow(cc, s));
        for tt in 1..=t {
            let v = BigUint::from(tt) * &row[tt] + BigUint::from(s + 1) * &next[tt - 1];
            next.push(v);
        }
        row = next;
    }
    row[t].clone()
}

/// `Ψ(1, t) = 1`, `Ψ(c, t) = 3(c+1)^(2t+1) + 2tΨ(c-1, t)`.
pub fn psi_ft_bound(c: usize, t: usize) -> BigUint {
    let mut psi = BigUint::one();
    for cc in 2..=c {
        psi = BigUint::from(3u32) * pow(cc + 1, 2 * t + 1) + BigUint::from(2 * t) * psi;
    }
    psi
}

/// `c^(7t+7)`.
pub fn psi_lt_bound(c: usize, t: usize) -> BigUint {
    pow(c, 7 * t + 7)
}

/// `c^14`, the bound for every proper induced subgraph of P5.
pub fn proper_p5_bound(c: usize) -> BigUint {
    pow(c, 14)
}
