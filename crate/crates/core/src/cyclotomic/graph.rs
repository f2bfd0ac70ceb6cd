use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{c_value, CValue};
use crate::error::{Error, Result};
use crate::polyring::is_prime;

/// Primes at which a coefficient ring is p-adically separated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Separation {
    AllPrimes,
    NoPrimes,
    /// separated exactly at the primes not dividing the given integer
    PrimesNotDividing(u64),
}

/// The separatedness profile of a coefficient ring `R`, which is all the
/// index graph needs to know about it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    name: String,
    is_zero_ring: bool,
    separation: Separation,
}

impl RingDescriptor {
    pub fn integers() -> Self {
        RingDescriptor { name: "Z".into(), is_zero_ring: false, separation: Separation::AllPrimes }
    }

    pub fn rationals() -> Self {
        RingDescriptor { name: "Q".into(), is_zero_ring: false, separation: Separation::NoPrimes }
    }

    /// `Z[1/m]`; `m = 1` gives back `Z`.
    pub fn localized(m: u64) -> Result<Self> {
        match m {
            0 => Err(Error::InvalidInput("cannot invert 0".into())),
            1 => Ok(Self::integers()),
            _ => Ok(RingDescriptor {
                name: format!("Z[1/{m}]"),
                is_zero_ring: false,
                separation: Separation::PrimesNotDividing(m),
            }),
        }
    }

    pub fn zero_ring() -> Self {
        RingDescriptor { name: "0".into(), is_zero_ring: true, separation: Separation::AllPrimes }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_zero_ring(&self) -> bool {
        self.is_zero_ring
    }

    pub fn separation(&self) -> Separation {
        self.separation
    }

    /// Whether `R` is p-adically separated. In the zero ring every such
    /// intersection is trivially zero.
    pub fn is_separated_at(&self, p: u64) -> bool {
        debug_assert!(is_prime(p));
        if self.is_zero_ring {
            return true;
        }
        match self.separation {
            Separation::AllPrimes => true,
            Separation::NoPrimes => false,
            Separation::PrimesNotDividing(m) => m % p != 0,
        }
    }

    /// Whether `R` is `(c)`-adically separated for the ideal generated by `c`.
    pub fn is_c_adically_separated(&self, c: CValue) -> bool {
        match c {
            CValue::Zero => true,
            CValue::One => self.is_zero_ring,
            CValue::Prime(p) => self.is_separated_at(p),
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl FromStr for RingDescriptor {
    type Err = Error;

    /// Accepts `Z`, `Q`, `0`, and `Z1/m` or `Z[1/m]`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "Z" => return Ok(Self::integers()),
            "Q" => return Ok(Self::rationals()),
            "0" => return Ok(Self::zero_ring()),
            _ => {}
        }
        let inner = s
            .strip_prefix("Z[1/")
            .and_then(|r| r.strip_suffix(']'))
            .or_else(|| s.strip_prefix("Z1/"))
            .ok_or_else(|| Error::InvalidInput(format!("unknown ring {s:?}")))?;
        let m = inner
            .parse::<u64>()
            .map_err(|_| Error::InvalidInput(format!("bad localization in {s:?}")))?;
        Self::localized(m)
    }
}

/// Adjacency in `Gamma_R`: equal indices, a prime-power ratio at a prime
/// where `R` is separated, or `R = 0`.
pub fn is_adjacent(desc: &RingDescriptor, m: u64, n: u64) -> bool {
    if m == n || desc.is_zero_ring() {
        return true;
    }
    match c_value(m, n) {
        CValue::Prime(p) => desc.is_separated_at(p),
        _ => false,
    }
}

/// The graph `Gamma_R(S)` on a finite vertex set.
#[derive(Clone, Debug)]
pub struct AdjacencyGraph {
    vertices: Vec<u64>,
    descriptor: RingDescriptor,
}

impl AdjacencyGraph {
    pub fn new(descriptor: RingDescriptor, vertices: impl IntoIterator<Item = u64>) -> Result<Self> {
        let set: BTreeSet<u64> = vertices.into_iter().collect();
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        if set.contains(&0) {
            return Err(Error::InvalidInput("vertices must be positive".into()));
        }
        Ok(AdjacencyGraph { vertices: set.into_iter().collect(), descriptor })
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    /// Non-loop edges `(m, n)` with `m < n`.
    pub fn edges(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for (i, &m) in self.vertices.iter().enumerate() {
            for &n in &self.vertices[i + 1..] {
                if is_adjacent(&self.descriptor, m, n) {
                    out.push((m, n));
                }
            }
        }
        out
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<u64>> {
        let k = self.vertices.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for i in 0..k {
            for j in i + 1..k {
                if is_adjacent(&self.descriptor, self.vertices[i], self.vertices[j]) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<u64>> = Default::default();
        for i in 0..k {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(self.vertices[i]);
        }
        let mut comps: Vec<Vec<u64>> = groups.into_values().collect();
        comps.sort_by_key(|c| c[0]);
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }
}

/// Partition of `set` into connected components of `Gamma_R(set)`.
pub fn connected_components(desc: &RingDescriptor, set: &[u64]) -> Result<Vec<Vec<u64>>> {
    Ok(AdjacencyGraph::new(desc.clone(), set.iter().copied())?.components())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_examples() {
        let z = RingDescriptor::integers();
        let q = RingDescriptor::rationals();
        assert!(!is_adjacent(&z, 1, 6));
        assert!(!is_adjacent(&q, 2, 4));
        assert!(is_adjacent(&z, 2, 4));
        assert!(is_adjacent(&q, 3, 3));
        assert!(is_adjacent(&RingDescriptor::zero_ring(), 1, 6));
    }

    #[test]
    fn component_examples() {
        let z = RingDescriptor::integers();
        let q = RingDescriptor::rationals();
        assert_eq!(connected_components(&z, &[1, 2, 6]).unwrap(), vec![vec![1, 2, 6]]);
        assert_eq!(
            connected_components(&q, &[1, 2, 6]).unwrap(),
            vec![vec![1], vec![2], vec![6]]
        );
        assert_eq!(connected_components(&z, &[6, 1]).unwrap(), vec![vec![1], vec![6]]);
        assert_eq!(connected_components(&z, &[]), Err(Error::EmptySet));
    }

    #[test]
    fn localized_ring() {
        let r: RingDescriptor = "Z1/2".parse().unwrap();
        assert!(!is_adjacent(&r, 1, 2));
        assert!(is_adjacent(&r, 1, 3));
        assert_eq!(
            connected_components(&r, &[1, 2, 4, 8, 3]).unwrap(),
            vec![vec![1, 3], vec![2], vec![4], vec![8]]
        );
        assert_eq!("Z[1/6]".parse::<RingDescriptor>().unwrap().name(), "Z[1/6]");
        assert_eq!("Z1/1".parse::<RingDescriptor>().unwrap(), RingDescriptor::integers());
        assert!("R".parse::<RingDescriptor>().is_err());
    }
}
