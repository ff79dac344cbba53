//! Element codecs for decoded codes.
//!
//! `Σ(a:A) B(a)` puts `(a, b)` at `offset(a) + b` with `offset(a) = Σ_{a'<a} |B(a')|`.
//! `Π(a:A) B(a)` puts `f` at `Σ_a f(a)·stride(a)` with `stride(a) = Π_{a'<a} |B(a')|`.
//! `A + B` puts the left block first.

pub fn sigma_size(fam: &[usize]) -> usize {
    fam.iter().sum()
}

pub fn pi_size(fam: &[usize]) -> usize {
    fam.iter().fold(1usize, |acc, &n| acc.saturating_mul(n))
}

pub fn sigma_offsets(fam: &[usize]) -> Vec<usize> {
    fam.iter()
        .scan(0, |acc, &n| {
            let here = *acc;
            *acc += n;
            Some(here)
        })
        .collect()
}

pub fn pi_strides(fam: &[usize]) -> Vec<usize> {
    fam.iter()
        .scan(1usize, |acc, &n| {
            let here = *acc;
            *acc = acc.saturating_mul(n);
            Some(here)
        })
        .collect()
}

pub fn sigma_encode(fam: &[usize], a: usize, b: usize) -> usize {
    debug_assert!(b < fam[a]);
    sigma_offsets(fam)[a] + b
}

pub fn sigma_decode(fam: &[usize], e: usize) -> (usize, usize) {
    let mut rest = e;
    for (a, &n) in fam.iter().enumerate() {
        if rest < n {
            return (a, rest);
        }
        rest -= n;
    }
    panic!("element {e} out of range for Σ over {fam:?}")
}

pub fn pi_encode(fam: &[usize], f: &[usize]) -> usize {
    debug_assert_eq!(f.len(), fam.len());
    pi_strides(fam).iter().zip(f).map(|(s, x)| s * x).sum()
}

pub fn pi_decode(fam: &[usize], e: usize) -> Vec<usize> {
    let mut rest = e;
    fam.iter()
        .map(|&n| {
            let digit = rest % n;
            rest /= n;
            digit
        })
        .collect()
}

pub fn sum_inl(x: usize) -> usize {
    x
}

pub fn sum_inr(left: usize, y: usize) -> usize {
    left + y
}
