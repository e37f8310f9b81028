//! ℤ-indexed sums `… + B_{-1} + B_0 + B_1 + …` of RJ4 blocks.

use std::fmt;

use serde::Serialize;

use super::schema::{l_family_index, make_l, rj4_mul_omega, Rj4Order};
use crate::error::{Error, Result};
use crate::lex::render_affine;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum BlockMap {
    /// Block `i` is `L_{slope·i + offset}·ω^{omega_power}`.
    LFamily {
        slope: i64,
        offset: i64,
        omega_power: u32,
    },
    /// Block `i` is `table[i mod table.len()]`.
    Table(Vec<Rj4Order>),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct ZBlockSum {
    map: BlockMap,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IVariant {
    Even,
    Odd,
    Mid,
}

impl IVariant {
    pub const ALL: [IVariant; 3] = [IVariant::Even, IVariant::Odd, IVariant::Mid];

    pub fn name(self) -> &'static str {
        match self {
            IVariant::Even => "I_even",
            IVariant::Odd => "I_odd",
            IVariant::Mid => "I_mid",
        }
    }
}

/// `I_even = … + L_{-2} + L_0 + L_2 + …`, `I_odd = … + L_{-1} + L_1 + …`,
/// `I = … + L_{-1} + L_0 + L_1 + …`.
pub fn make_i(variant: IVariant) -> ZBlockSum {
    let (slope, offset) = match variant {
        IVariant::Even => (2, 0),
        IVariant::Odd => (2, 1),
        IVariant::Mid => (1, 0),
    };
    ZBlockSum {
        map: BlockMap::LFamily {
            slope,
            offset,
            omega_power: 0,
        },
    }
}

/// Block index as a function of `i`, up to isomorphism of blocks.
#[derive(Debug, PartialEq, Eq)]
enum IndexFn {
    Affine(i64, i64),
    Periodic(Vec<i64>),
}

impl ZBlockSum {
    pub fn l_family(slope: i64, offset: i64) -> Result<Self> {
        Ok(ZBlockSum {
            map: BlockMap::LFamily {
                slope,
                offset,
                omega_power: 0,
            },
        })
    }

    pub fn table(blocks: Vec<Rj4Order>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Schema("block table must be nonempty".into()));
        }
        Ok(ZBlockSum {
            map: BlockMap::Table(blocks),
        })
    }

    pub fn map(&self) -> &BlockMap {
        &self.map
    }

    pub fn block(&self, i: i64) -> Rj4Order {
        match &self.map {
            BlockMap::LFamily {
                slope,
                offset,
                omega_power,
            } => (0..*omega_power).fold(make_l(slope * i + offset), |b, _| rj4_mul_omega(&b)),
            BlockMap::Table(t) => t[i.rem_euclid(t.len() as i64) as usize].clone(),
        }
    }

    /// Consecutive blocks covering every kind of block and block boundary
    /// the sum contains.
    pub fn representative_blocks(&self) -> Vec<Rj4Order> {
        match &self.map {
            BlockMap::LFamily { .. } => (-2..=2).map(|i| self.block(i)).collect(),
            BlockMap::Table(t) => t.iter().chain(t.first()).cloned().collect(),
        }
    }

    pub fn variant(&self) -> Option<IVariant> {
        IVariant::ALL.into_iter().find(|&v| make_i(v) == *self)
    }

    /// Folds pending factors of `ω` into the block index: each
    /// `L_m·ω ≅ L_{m+1}`, checked on representatives with Slater's criterion.
    pub fn reindexed(&self) -> ZBlockSum {
        match &self.map {
            BlockMap::LFamily {
                slope,
                offset,
                omega_power,
            } if *omega_power > 0 => {
                let shifted = offset + i64::from(*omega_power);
                for i in -2..=2 {
                    debug_assert_eq!(l_family_index(&self.block(i)), Some(slope * i + shifted));
                }
                ZBlockSum {
                    map: BlockMap::LFamily {
                        slope: *slope,
                        offset: shifted,
                        omega_power: 0,
                    },
                }
            }
            _ => self.clone(),
        }
    }

    fn index_fn(&self) -> Result<IndexFn> {
        match &self.map {
            BlockMap::LFamily {
                slope,
                offset,
                omega_power,
            } => {
                let offset = offset + i64::from(*omega_power);
                for i in -2..=2 {
                    if l_family_index(&self.block(i)) != Some(slope * i + offset) {
                        return Err(Error::Precondition(format!(
                            "block {i} is not isomorphic to its L-family index"
                        )));
                    }
                }
                Ok(if *slope == 0 {
                    IndexFn::Periodic(vec![offset])
                } else {
                    IndexFn::Affine(*slope, offset)
                })
            }
            BlockMap::Table(t) => t
                .iter()
                .enumerate()
                .map(|(i, b)| {
                    l_family_index(b).ok_or_else(|| {
                        Error::Precondition(format!("block {i} is not an L-family order"))
                    })
                })
                .collect::<Result<Vec<_>>>()
                .map(IndexFn::Periodic),
        }
    }
}

impl fmt::Display for ZBlockSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.variant() {
            return write!(f, "{}", v.name());
        }
        match &self.map {
            BlockMap::LFamily {
                slope,
                offset,
                omega_power,
            } => {
                let base = format!("zsum{{L({})}}", render_affine(*slope, *offset, "i"));
                match omega_power {
                    0 => write!(f, "{base}"),
                    1 => write!(f, "({base} * w)"),
                    t => write!(f, "({base} * w^{t})"),
                }
            }
            BlockMap::Table(t) => {
                write!(f, "zsum{{[")?;
                for (i, b) in t.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{b}")?;
                }
                write!(f, "]}}")
            }
        }
    }
}

/// Right multiplication by `ω`, which distributes over the ℤ-sum: block
/// `i` becomes `block(i)·ω`.
pub fn zsum_mul_omega(sum: &ZBlockSum) -> ZBlockSum {
    let map = match &sum.map {
        BlockMap::LFamily {
            slope,
            offset,
            omega_power,
        } => BlockMap::LFamily {
            slope: *slope,
            offset: *offset,
            omega_power: omega_power + 1,
        },
        BlockMap::Table(t) => BlockMap::Table(t.iter().map(rj4_mul_omega).collect()),
    };
    ZBlockSum { map }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A shift `d` with `S(i) ≅ T(i + d)` for every `i`, if one exists.
///
/// Blocks must come from the L-family. Such blocks contain no `(ω, ω)`-gap
/// while every block boundary is one, so an isomorphism of the sums maps
/// blocks onto blocks in order; it therefore exists iff some shift matches
/// blocks pairwise.
pub fn zsum_match(s: &ZBlockSum, t: &ZBlockSum) -> Result<Option<i64>> {
    Ok(match (s.index_fn()?, t.index_fn()?) {
        (IndexFn::Affine(p, q), IndexFn::Affine(p2, q2)) => {
            // p·i + q = p·(i + d) + q2
            (p == p2 && (q - q2) % p == 0).then(|| (q - q2) / p)
        }
        (IndexFn::Periodic(a), IndexFn::Periodic(b)) => {
            let lcm = a.len() / gcd(a.len(), b.len()) * b.len();
            (0..b.len())
                .find(|&d| (0..lcm).all(|i| a[i % a.len()] == b[(i + d) % b.len()]))
                .map(|d| d as i64)
        }
        _ => None,
    })
}

pub fn zsum_iso(s: &ZBlockSum, t: &ZBlockSum) -> Result<bool> {
    Ok(zsum_match(s, t)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_block_maps() {
        assert_eq!(make_i(IVariant::Even).block(0), make_l(0));
        assert_eq!(make_i(IVariant::Odd).block(-1), make_l(-1));
        assert_eq!(make_i(IVariant::Mid).block(3), make_l(3));
    }

    #[test]
    fn multiplication_by_omega_permutes_the_variants() {
        let (e, o, m) = (
            make_i(IVariant::Even),
            make_i(IVariant::Odd),
            make_i(IVariant::Mid),
        );
        assert!(zsum_iso(&zsum_mul_omega(&e), &o).unwrap());
        assert!(zsum_iso(&zsum_mul_omega(&o), &e).unwrap());
        assert!(zsum_iso(&zsum_mul_omega(&m), &m).unwrap());
        assert_eq!(zsum_mul_omega(&e).reindexed(), o);
    }

    #[test]
    fn variants_are_pairwise_distinct() {
        for a in IVariant::ALL {
            for b in IVariant::ALL {
                assert_eq!(zsum_iso(&make_i(a), &make_i(b)).unwrap(), a == b);
            }
        }
    }

    #[test]
    fn shift_witnesses() {
        let o = make_i(IVariant::Odd);
        let e2 = zsum_mul_omega(&zsum_mul_omega(&make_i(IVariant::Even)));
        // L_{2i}·ω² ≅ L_{2i+2} = block i+1 of I_even
        assert_eq!(zsum_match(&e2, &make_i(IVariant::Even)).unwrap(), Some(1));
        assert_eq!(zsum_match(&o, &o).unwrap(), Some(0));
    }

    #[test]
    fn tables() {
        let t = ZBlockSum::table(vec![make_l(0), make_l(1)]).unwrap();
        let u = ZBlockSum::table(vec![make_l(1), make_l(0), make_l(1), make_l(0)]).unwrap();
        assert_eq!(zsum_match(&t, &u).unwrap(), Some(1));
        let c = ZBlockSum::l_family(0, 0).unwrap();
        let single = ZBlockSum::table(vec![make_l(0)]).unwrap();
        assert!(zsum_iso(&c, &single).unwrap());
        assert!(!zsum_iso(&c, &t).unwrap());
        assert!(!zsum_iso(&make_i(IVariant::Mid), &t).unwrap());
        let wrapped = zsum_mul_omega(&t);
        assert!(zsum_iso(
            &wrapped,
            &ZBlockSum::table(vec![make_l(2), make_l(1)]).unwrap()
        )
        .unwrap());
    }

    #[test]
    fn non_family_blocks_are_refused() {
        use crate::scattered::schema::{Affine, EvAffineSeq};
        let odd =
            Rj4Order::new(EvAffineSeq::pure_tail(Affine::new(2, 0), Affine::new(1, 0)).unwrap());
        let t = ZBlockSum::table(vec![odd]).unwrap();
        assert!(matches!(zsum_iso(&t, &t), Err(Error::Precondition(_))));
        assert!(ZBlockSum::table(vec![]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(make_i(IVariant::Even).to_string(), "I_even");
        assert_eq!(
            ZBlockSum::l_family(2, -3).unwrap().to_string(),
            "zsum{L(2*i-3)}"
        );
        assert_eq!(
            zsum_mul_omega(&make_i(IVariant::Mid)).to_string(),
            "(zsum{L(i)} * w)"
        );
    }
}
