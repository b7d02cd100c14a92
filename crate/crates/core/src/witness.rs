//! Finitely supported distributions and systems of them.
//!
//! A [`WitnessSystem`] of independent random variables `U_1, ..., U_n` with
//! pairwise-disjoint supports is a certificate that the tuple of its cycle
//! probabilities `P(U_{i+1} > U_i)` is cyclic. Everything here is exact.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::number::{format_rational, parse_rational};
use crate::tuple::ProbTuple;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    pub point: BigRational,
    pub weight: BigRational,
}

/// A distribution on finitely many rational points. Atoms are kept sorted by
/// point; zero-weight atoms are allowed and kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteDist {
    atoms: Vec<Atom>,
}

impl DiscreteDist {
    pub fn new(atoms: impl IntoIterator<Item = (BigRational, BigRational)>) -> Result<Self> {
        let mut atoms: Vec<Atom> = atoms
            .into_iter()
            .map(|(point, weight)| Atom { point, weight })
            .collect();
        if atoms.is_empty() {
            return Err(Error::InvalidDistribution("no atoms".into()));
        }
        if let Some(a) = atoms.iter().find(|a| a.weight.is_negative()) {
            return Err(Error::InvalidDistribution(format!(
                "negative weight {} at {}",
                a.weight, a.point
            )));
        }
        let total: BigRational = atoms.iter().map(|a| &a.weight).sum();
        if !total.is_one() {
            return Err(Error::InvalidDistribution(format!(
                "weights sum to {total}"
            )));
        }
        atoms.sort_by(|a, b| a.point.cmp(&b.point));
        if let Some(w) = atoms.windows(2).find(|w| w[0].point == w[1].point) {
            return Err(Error::InvalidDistribution(format!(
                "repeated point {}",
                w[0].point
            )));
        }
        Ok(Self { atoms })
    }

    /// A fair die with the given faces. Repeated faces are merged.
    pub fn fair_die(faces: &[i64]) -> Result<Self> {
        if faces.is_empty() {
            return Err(Error::InvalidDistribution("die without faces".into()));
        }
        let mut counts: BTreeMap<i64, i64> = BTreeMap::new();
        for &f in faces {
            *counts.entry(f).or_default() += 1;
        }
        let sides = faces.len() as i64;
        Self::new(counts.into_iter().map(|(face, c)| {
            (
                BigRational::from_integer(face.into()),
                BigRational::new(c.into(), sides.into()),
            )
        }))
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Points carrying positive weight.
    pub fn support(&self) -> impl Iterator<Item = &BigRational> {
        self.atoms
            .iter()
            .filter(|a| a.weight.is_positive())
            .map(|a| &a.point)
    }

    /// `P(self > other)` for independent variables.
    pub fn prob_greater_than(&self, other: &DiscreteDist) -> BigRational {
        // Walk `other` in increasing order while accumulating the mass of
        // `self` at or below the current point.
        let mut below_or_at = BigRational::zero();
        let mut j = 0;
        let mut total = BigRational::zero();
        for b in &other.atoms {
            while j < self.atoms.len() && self.atoms[j].point <= b.point {
                below_or_at += &self.atoms[j].weight;
                j += 1;
            }
            if !b.weight.is_zero() {
                total += &b.weight * (BigRational::one() - &below_or_at);
            }
        }
        total
    }
}

/// Independent variables `U_1, ..., U_n` with pairwise-disjoint supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSystem {
    dists: Vec<DiscreteDist>,
}

impl WitnessSystem {
    pub fn new(dists: Vec<DiscreteDist>) -> Result<Self> {
        if dists.len() < 3 {
            return Err(Error::BadDimension {
                n: dists.len(),
                min: 3,
            });
        }
        let mut owner: BTreeMap<&BigRational, usize> = BTreeMap::new();
        for (i, d) in dists.iter().enumerate() {
            for p in d.support() {
                if let Some(&j) = owner.get(p) {
                    return Err(Error::OverlappingSupports(j, i));
                }
                owner.insert(p, i);
            }
        }
        Ok(Self { dists })
    }

    pub fn len(&self) -> usize {
        self.dists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dists.is_empty()
    }

    pub fn dists(&self) -> &[DiscreteDist] {
        &self.dists
    }

    /// `(P(U_2 > U_1), ..., P(U_n > U_{n-1}), P(U_1 > U_n))`.
    pub fn cycle_probabilities(&self) -> Vec<BigRational> {
        let n = self.dists.len();
        (0..n)
            .map(|i| self.dists[(i + 1) % n].prob_greater_than(&self.dists[i]))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let wire: WireWitness =
            serde_json::from_str(s).map_err(|e| Error::WitnessJson(e.to_string()))?;
        wire.try_into()
    }
}

/// Exact check that `w` realizes `t`: every cycle probability must equal the
/// corresponding entry of `t`.
pub fn verify_witness(w: &WitnessSystem, t: &ProbTuple<BigRational>) -> bool {
    w.len() == t.len()
        && w.cycle_probabilities()
            .iter()
            .zip(t.values())
            .all(|(p, x)| p == x)
}

#[derive(Serialize, Deserialize)]
struct WireAtom {
    point: String,
    weight: String,
}

#[derive(Serialize, Deserialize)]
struct WireWitness {
    n: usize,
    dists: Vec<Vec<WireAtom>>,
}

impl From<&WitnessSystem> for WireWitness {
    fn from(w: &WitnessSystem) -> Self {
        WireWitness {
            n: w.len(),
            dists: w
                .dists
                .iter()
                .map(|d| {
                    d.atoms
                        .iter()
                        .map(|a| WireAtom {
                            point: format_rational(&a.point),
                            weight: format_rational(&a.weight),
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

impl TryFrom<WireWitness> for WitnessSystem {
    type Error = Error;

    fn try_from(wire: WireWitness) -> Result<Self> {
        if wire.n != wire.dists.len() {
            return Err(Error::WitnessJson(format!(
                "n = {} but {} distributions given",
                wire.n,
                wire.dists.len()
            )));
        }
        let dists = wire
            .dists
            .into_iter()
            .map(|atoms| {
                let atoms = atoms
                    .into_iter()
                    .map(|a| Ok((parse_rational(&a.point)?, parse_rational(&a.weight)?)))
                    .collect::<Result<Vec<_>>>()?;
                DiscreteDist::new(atoms)
            })
            .collect::<Result<Vec<_>>>()?;
        WitnessSystem::new(dists)
    }
}

impl Serialize for WitnessSystem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        WireWitness::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WitnessSystem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = WireWitness::deserialize(d)?;
        wire.try_into().map_err(serde::de::Error::custom)
    }
}

/// The Efron dice `A, B, C, D`; each beats the previous one with probability 2/3.
pub fn efron_dice() -> WitnessSystem {
    let faces: [&[i64]; 4] = [
        &[0, 0, 4, 4, 4, 4],
        &[1, 1, 1, 5, 5, 5],
        &[2, 2, 2, 2, 6, 6],
        &[3, 3, 3, 3, 3, 3],
    ];
    WitnessSystem::new(
        faces
            .iter()
            .map(|f| DiscreteDist::fair_die(f).unwrap())
            .collect(),
    )
    .expect("disjoint faces")
}

/// The three-sided Moon-Moser dice, cyclic with probability 5/9.
pub fn moon_moser_dice() -> WitnessSystem {
    let faces: [&[i64]; 3] = [&[1, 5, 9], &[2, 6, 7], &[3, 4, 8]];
    WitnessSystem::new(
        faces
            .iter()
            .map(|f| DiscreteDist::fair_die(f).unwrap())
            .collect(),
    )
    .expect("disjoint faces")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// Brute-force `P(a > b)` over the joint support.
    fn joint_oracle(a: &DiscreteDist, b: &DiscreteDist) -> BigRational {
        let mut p = BigRational::zero();
        for x in a.atoms() {
            for y in b.atoms() {
                if x.point > y.point {
                    p += &x.weight * &y.weight;
                }
            }
        }
        p
    }

    #[test]
    fn efron_dice_are_cyclic_with_two_thirds() {
        let w = efron_dice();
        assert_eq!(w.cycle_probabilities(), vec![q(2, 3); 4]);
        assert!(verify_witness(&w, &"2/3,2/3,2/3,2/3".parse().unwrap()));
        assert!(!verify_witness(&w, &"2/3,2/3,2/3,0.6666".parse().unwrap()));
    }

    #[test]
    fn moon_moser_dice_are_cyclic_with_five_ninths() {
        let w = moon_moser_dice();
        assert_eq!(w.cycle_probabilities(), vec![q(5, 9); 3]);
        assert!(verify_witness(&w, &"5/9,5/9,5/9".parse().unwrap()));
        // length mismatch
        assert!(!verify_witness(&w, &"5/9,5/9,5/9,5/9".parse().unwrap()));
    }

    #[test]
    fn sweep_matches_joint_enumeration() {
        let dice = efron_dice();
        let ds = dice.dists();
        for a in ds {
            for b in ds {
                assert_eq!(a.prob_greater_than(b), joint_oracle(a, b));
            }
        }
        let mm = moon_moser_dice();
        for a in mm.dists() {
            for b in mm.dists() {
                assert_eq!(a.prob_greater_than(b), joint_oracle(a, b));
            }
        }
    }

    #[test]
    fn distribution_validation() {
        assert!(DiscreteDist::new(vec![(q(0, 1), q(1, 2))]).is_err());
        assert!(DiscreteDist::new(vec![(q(0, 1), q(3, 2)), (q(1, 1), q(-1, 2))]).is_err());
        assert!(DiscreteDist::new(vec![(q(0, 1), q(1, 2)), (q(0, 1), q(1, 2))]).is_err());
        assert!(DiscreteDist::new(vec![(q(0, 1), q(1, 1)), (q(1, 1), q(0, 1))]).is_ok());
    }

    #[test]
    fn overlapping_supports_are_rejected() {
        let d = |p: i64| DiscreteDist::new(vec![(q(p, 1), q(1, 1))]).unwrap();
        assert_eq!(
            WitnessSystem::new(vec![d(0), d(1), d(0)]),
            Err(Error::OverlappingSupports(0, 2))
        );
        // a shared point with zero weight is not in the support
        let zero_mass = DiscreteDist::new(vec![(q(0, 1), q(0, 1)), (q(7, 1), q(1, 1))]).unwrap();
        assert!(WitnessSystem::new(vec![d(0), d(1), zero_mass]).is_ok());
    }

    #[test]
    fn json_round_trip() {
        let w = efron_dice();
        let json = w.to_json();
        assert!(json.starts_with(r#"{"n":4,"dists":[[{"point":"0","weight":"1/3"}"#));
        assert_eq!(WitnessSystem::from_json(&json).unwrap(), w);
        assert!(WitnessSystem::from_json(r#"{"n":3,"dists":[]}"#).is_err());
    }
}
