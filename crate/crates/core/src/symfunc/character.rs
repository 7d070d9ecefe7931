//! Irreducible characters of the symmetric group by the Murnaghan–Nakayama
//! rule, worked on beta-sets (first-column hook lengths) so that removing a
//! border strip of length `h` is sliding one bead down by `h` positions.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::Partition;
use crate::{Error, Result};

/// Memoized character values `χ^μ(λ)`.
///
/// Keys are `(shape, remaining cycle type)`, so evaluations for cycle types
/// sharing a tail of small parts reuse each other.
#[derive(Debug, Default, Clone)]
pub struct CharacterTable {
    memo: BTreeMap<(Partition, Partition), i64>,
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ^μ(λ)`: the irreducible character indexed by `mu` at the class of
    /// cycle type `lambda`.
    pub fn value(&mut self, mu: &Partition, lambda: &Partition) -> Result<i64> {
        if mu.weight() != lambda.weight() {
            return Err(Error::WeightMismatch { left: mu.weight(), right: lambda.weight() });
        }
        Ok(self.eval(mu, lambda))
    }

    fn eval(&mut self, mu: &Partition, lambda: &Partition) -> i64 {
        if lambda.is_empty() {
            return 1;
        }
        let key = (mu.clone(), lambda.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let (&strip, rest) = lambda.parts().split_first().expect("nonempty");
        let rest = Partition::new(rest.to_vec());
        let mut total = 0;
        for (shape, sign) in border_strips(mu, strip) {
            total += sign * self.eval(&shape, &rest);
        }
        self.memo.insert(key, total);
        total
    }
}

/// `χ^μ(λ)` with a throwaway memo table.
pub fn mn_character(mu: &Partition, lambda: &Partition) -> Result<i64> {
    CharacterTable::new().value(mu, lambda)
}

/// All ways to remove a border strip of length `h` from `mu`, as
/// `(remaining shape, (-1)^height)`.
fn border_strips(mu: &Partition, h: u32) -> Vec<(Partition, i64)> {
    let r = mu.len() as u32;
    let beta: Vec<u32> = mu
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + r - 1 - i as u32)
        .collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < h || beta.contains(&(b - h)) {
            continue;
        }
        let target = b - h;
        let crossed = beta.iter().filter(|&&c| c > target && c < b).count();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (r - 1 - j as u32))
            .collect();
        out.push((Partition::new(parts), sign));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::partitions_of;

    #[test]
    fn trivial_and_sign() {
        for n in 1..=7 {
            let row = Partition::single(n);
            let column = Partition::new(alloc::vec![1; n as usize]);
            for lambda in partitions_of(n) {
                assert_eq!(mn_character(&row, &lambda).unwrap(), 1);
                // sign of a permutation with cycle type λ is (-1)^(n - len)
                let sign = if (n as usize - lambda.len()).is_multiple_of(2) { 1 } else { -1 };
                assert_eq!(mn_character(&column, &lambda).unwrap(), sign);
            }
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(mn_character(&[1, 1].into(), &[2].into()).unwrap(), -1);
        assert_eq!(mn_character(&[2, 2].into(), &[3, 1].into()).unwrap(), -1);
        assert_eq!(mn_character(&[2, 2].into(), &[1, 1, 1, 1].into()).unwrap(), 2);
        assert_eq!(mn_character(&[2, 1].into(), &[3].into()).unwrap(), -1);
        assert_eq!(mn_character(&[3, 2].into(), &[1, 1, 1, 1, 1].into()).unwrap(), 5);
    }

    #[test]
    fn weight_mismatch() {
        assert_eq!(
            mn_character(&[2].into(), &[1].into()),
            Err(Error::WeightMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn empty_shape() {
        assert_eq!(mn_character(&Partition::empty(), &Partition::empty()).unwrap(), 1);
    }
}
