//! Abelian groups with exact arithmetic.
//!
//! A [`GroupValue`] carries enough information to recover its own
//! [`GroupSpec`]: cyclic residues store their modulus and product elements are
//! tuples of component values.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group mismatch: {0} vs {1}")]
    SpecMismatch(String, String),
    #[error("cannot parse group spec {0:?}: {1}")]
    ParseSpec(String, String),
    #[error("cannot parse value {0:?} in group {1}")]
    ParseValue(String, String),
}

/// Description of a concrete Abelian group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupSpec {
    Integers,
    Rationals,
    /// Z/mZ with m >= 2.
    Cyclic(u64),
    /// Direct product of the listed factors.
    Product(Vec<GroupSpec>),
}

impl GroupSpec {
    pub fn cyclic(m: u64) -> Result<Self, GroupError> {
        if m < 2 {
            return Err(GroupError::ParseSpec(format!("Z%{m}"), "modulus must be at least 2".into()));
        }
        Ok(GroupSpec::Cyclic(m))
    }

    pub fn product(factors: Vec<GroupSpec>) -> Result<Self, GroupError> {
        if factors.is_empty() {
            return Err(GroupError::ParseSpec(String::new(), "empty product".into()));
        }
        let spec = GroupSpec::Product(factors);
        spec.check_exponent()?;
        Ok(spec)
    }

    fn check_exponent(&self) -> Result<(), GroupError> {
        if let GroupSpec::Product(fs) = self {
            let mut acc: Option<u128> = Some(1);
            for f in fs {
                f.check_exponent()?;
                acc = match (acc, f.exponent()) {
                    (Some(a), Some(e)) => Some(a.lcm(&(e as u128))),
                    _ => None,
                };
                if let Some(a) = acc {
                    if a > u64::MAX as u128 {
                        return Err(GroupError::ParseSpec(self.to_string(), "exponent overflows u64".into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// Least common multiple of element orders; `None` for groups with
    /// elements of infinite order.
    pub fn exponent(&self) -> Option<u64> {
        match self {
            GroupSpec::Integers | GroupSpec::Rationals => None,
            GroupSpec::Cyclic(m) => Some(*m),
            GroupSpec::Product(fs) => {
                let mut acc: u64 = 1;
                for f in fs {
                    acc = acc.lcm(&f.exponent()?);
                }
                Some(acc)
            }
        }
    }

    /// Number of elements, if finite and representable.
    pub fn order(&self) -> Option<u64> {
        match self {
            GroupSpec::Integers | GroupSpec::Rationals => None,
            GroupSpec::Cyclic(m) => Some(*m),
            GroupSpec::Product(fs) => fs.iter().try_fold(1u64, |acc, f| acc.checked_mul(f.order()?)),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    pub fn zero(&self) -> GroupValue {
        match self {
            GroupSpec::Integers => GroupValue::Int(BigInt::zero()),
            GroupSpec::Rationals => GroupValue::Rat(BigRational::zero()),
            GroupSpec::Cyclic(m) => GroupValue::Mod { value: 0, modulus: *m },
            GroupSpec::Product(fs) => GroupValue::Tuple(fs.iter().map(|f| f.zero()).collect()),
        }
    }

    /// A fixed nonzero element: 1 in every component.
    pub fn unit(&self) -> GroupValue {
        match self {
            GroupSpec::Integers => GroupValue::Int(BigInt::one()),
            GroupSpec::Rationals => GroupValue::Rat(BigRational::one()),
            GroupSpec::Cyclic(m) => GroupValue::Mod { value: 1, modulus: *m },
            GroupSpec::Product(fs) => GroupValue::Tuple(fs.iter().map(|f| f.unit()).collect()),
        }
    }

    /// All elements in canonical order, for finite groups.
    pub fn elements(&self) -> Option<Vec<GroupValue>> {
        match self {
            GroupSpec::Integers | GroupSpec::Rationals => None,
            GroupSpec::Cyclic(m) => Some((0..*m).map(|v| GroupValue::Mod { value: v, modulus: *m }).collect()),
            GroupSpec::Product(fs) => {
                let mut out: Vec<Vec<GroupValue>> = vec![Vec::new()];
                for f in fs {
                    let els = f.elements()?;
                    let mut next = Vec::with_capacity(out.len() * els.len());
                    for prefix in &out {
                        for e in &els {
                            let mut t = prefix.clone();
                            t.push(e.clone());
                            next.push(t);
                        }
                    }
                    out = next;
                }
                Some(out.into_iter().map(GroupValue::Tuple).collect())
            }
        }
    }

    /// Random element. Integer components are drawn from [-10, 10] and
    /// rationals as p/q with p in [-10, 10], q in [1, 6].
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> GroupValue {
        match self {
            GroupSpec::Integers => GroupValue::Int(BigInt::from(rng.gen_range(-10i64..=10))),
            GroupSpec::Rationals => {
                let p = BigInt::from(rng.gen_range(-10i64..=10));
                let q = BigInt::from(rng.gen_range(1i64..=6));
                GroupValue::Rat(BigRational::new(p, q))
            }
            GroupSpec::Cyclic(m) => GroupValue::Mod { value: rng.gen_range(0..*m), modulus: *m },
            GroupSpec::Product(fs) => GroupValue::Tuple(fs.iter().map(|f| f.sample(rng)).collect()),
        }
    }

    pub fn sample_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> GroupValue {
        loop {
            let v = self.sample(rng);
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub fn parse_value(&self, s: &str) -> Result<GroupValue, GroupError> {
        let err = || GroupError::ParseValue(s.to_string(), self.to_string());
        let s = s.trim();
        match self {
            GroupSpec::Integers => s.parse::<BigInt>().map(GroupValue::Int).map_err(|_| err()),
            GroupSpec::Rationals => {
                let r = match s.split_once('/') {
                    Some((p, q)) => {
                        let p: BigInt = p.trim().parse().map_err(|_| err())?;
                        let q: BigInt = q.trim().parse().map_err(|_| err())?;
                        if q.is_zero() {
                            return Err(err());
                        }
                        BigRational::new(p, q)
                    }
                    None => BigRational::from_integer(s.parse().map_err(|_| err())?),
                };
                Ok(GroupValue::Rat(r))
            }
            GroupSpec::Cyclic(m) => {
                let v: BigInt = s.parse().map_err(|_| err())?;
                let r = v.mod_floor(&BigInt::from(*m)).to_u64().ok_or_else(err)?;
                Ok(GroupValue::Mod { value: r, modulus: *m })
            }
            GroupSpec::Product(fs) => {
                let inner = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(err)?;
                let parts: Vec<&str> = inner.split(',').collect();
                if parts.len() != fs.len() {
                    return Err(err());
                }
                let vals = fs.iter().zip(parts).map(|(f, p)| f.parse_value(p)).collect::<Result<Vec<_>, _>>()?;
                Ok(GroupValue::Tuple(vals))
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Integers => write!(f, "Z"),
            GroupSpec::Rationals => write!(f, "Q"),
            GroupSpec::Cyclic(m) => write!(f, "Z%{m}"),
            GroupSpec::Product(fs) => {
                for (i, g) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |msg: &str| GroupError::ParseSpec(s.to_string(), msg.to_string());
        let parts: Vec<&str> = s.split(" x ").map(str::trim).collect();
        let parse_one = |p: &str| -> Result<GroupSpec, GroupError> {
            match p {
                "Z" => Ok(GroupSpec::Integers),
                "Q" => Ok(GroupSpec::Rationals),
                _ => {
                    let m = p.strip_prefix("Z%").ok_or_else(|| err("expected Z, Q or Z%m"))?;
                    let m: u64 = m.parse().map_err(|_| err("bad modulus"))?;
                    GroupSpec::cyclic(m)
                }
            }
        };
        if parts.len() == 1 {
            parse_one(parts[0])
        } else {
            GroupSpec::product(parts.into_iter().map(parse_one).collect::<Result<_, _>>()?)
        }
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An element of a concrete Abelian group.
///
/// The derived ordering is the canonical order used for tie-breaking.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupValue {
    Int(BigInt),
    Rat(BigRational),
    /// Residue in [0, modulus).
    Mod {
        value: u64,
        modulus: u64,
    },
    Tuple(Vec<GroupValue>),
}

fn mismatch(a: &GroupValue, b: &GroupValue) -> GroupError {
    GroupError::SpecMismatch(a.spec().to_string(), b.spec().to_string())
}

impl GroupValue {
    pub fn spec(&self) -> GroupSpec {
        match self {
            GroupValue::Int(_) => GroupSpec::Integers,
            GroupValue::Rat(_) => GroupSpec::Rationals,
            GroupValue::Mod { modulus, .. } => GroupSpec::Cyclic(*modulus),
            GroupValue::Tuple(vs) => GroupSpec::Product(vs.iter().map(|v| v.spec()).collect()),
        }
    }

    pub fn belongs_to(&self, spec: &GroupSpec) -> bool {
        match (self, spec) {
            (GroupValue::Int(_), GroupSpec::Integers) | (GroupValue::Rat(_), GroupSpec::Rationals) => true,
            (GroupValue::Mod { modulus, .. }, GroupSpec::Cyclic(m)) => modulus == m,
            (GroupValue::Tuple(vs), GroupSpec::Product(fs)) => vs.len() == fs.len() && vs.iter().zip(fs).all(|(v, f)| v.belongs_to(f)),
            _ => false,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            GroupValue::Int(v) => v.is_zero(),
            GroupValue::Rat(v) => v.is_zero(),
            GroupValue::Mod { value, .. } => *value == 0,
            GroupValue::Tuple(vs) => vs.iter().all(|v| v.is_zero()),
        }
    }

    pub fn checked_add(&self, other: &GroupValue) -> Result<GroupValue, GroupError> {
        Ok(match (self, other) {
            (GroupValue::Int(a), GroupValue::Int(b)) => GroupValue::Int(a + b),
            (GroupValue::Rat(a), GroupValue::Rat(b)) => GroupValue::Rat(a + b),
            (GroupValue::Mod { value: a, modulus: m }, GroupValue::Mod { value: b, modulus: m2 }) if m == m2 => {
                GroupValue::Mod { value: ((*a as u128 + *b as u128) % *m as u128) as u64, modulus: *m }
            }
            (GroupValue::Tuple(a), GroupValue::Tuple(b)) if a.len() == b.len() => {
                GroupValue::Tuple(a.iter().zip(b).map(|(x, y)| x.checked_add(y)).collect::<Result<_, _>>()?)
            }
            _ => return Err(mismatch(self, other)),
        })
    }

    pub fn checked_sub(&self, other: &GroupValue) -> Result<GroupValue, GroupError> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> GroupValue {
        match self {
            GroupValue::Int(a) => GroupValue::Int(-a),
            GroupValue::Rat(a) => GroupValue::Rat(-a),
            GroupValue::Mod { value, modulus } => {
                GroupValue::Mod { value: if *value == 0 { 0 } else { modulus - value }, modulus: *modulus }
            }
            GroupValue::Tuple(vs) => GroupValue::Tuple(vs.iter().map(|v| v.neg()).collect()),
        }
    }

    /// In-place addition. Panics on a group mismatch.
    pub fn add_assign_ref(&mut self, other: &GroupValue) {
        match (&mut *self, other) {
            (GroupValue::Int(a), GroupValue::Int(b)) => *a += b,
            (GroupValue::Rat(a), GroupValue::Rat(b)) => *a += b,
            (GroupValue::Mod { value: a, modulus: m }, GroupValue::Mod { value: b, modulus: m2 }) if m == m2 => {
                *a = ((*a as u128 + *b as u128) % *m as u128) as u64;
            }
            (GroupValue::Tuple(a), GroupValue::Tuple(b)) if a.len() == b.len() => {
                for (x, y) in a.iter_mut().zip(b) {
                    x.add_assign_ref(y);
                }
            }
            (a, b) => panic!("{}", mismatch(a, b)),
        }
    }

    /// In-place subtraction. Panics on a group mismatch.
    pub fn sub_assign_ref(&mut self, other: &GroupValue) {
        match (&mut *self, other) {
            (GroupValue::Int(a), GroupValue::Int(b)) => *a -= b,
            (GroupValue::Rat(a), GroupValue::Rat(b)) => *a -= b,
            (GroupValue::Mod { value: a, modulus: m }, GroupValue::Mod { value: b, modulus: m2 }) if m == m2 => {
                *a = ((*a as u128 + (*m - *b) as u128) % *m as u128) as u64;
            }
            (GroupValue::Tuple(a), GroupValue::Tuple(b)) if a.len() == b.len() => {
                for (x, y) in a.iter_mut().zip(b) {
                    x.sub_assign_ref(y);
                }
            }
            (a, b) => panic!("{}", mismatch(a, b)),
        }
    }

    /// n-fold sum of `self` (negated for n < 0).
    pub fn int_scale(&self, n: &BigInt) -> GroupValue {
        match self {
            GroupValue::Int(a) => GroupValue::Int(a * n),
            GroupValue::Rat(a) => GroupValue::Rat(a * BigRational::from_integer(n.clone())),
            GroupValue::Mod { value, modulus } => {
                let r = n.mod_floor(&BigInt::from(*modulus)).to_u64().expect("residue fits");
                GroupValue::Mod { value: ((r as u128 * *value as u128) % *modulus as u128) as u64, modulus: *modulus }
            }
            GroupValue::Tuple(vs) => GroupValue::Tuple(vs.iter().map(|v| v.int_scale(n)).collect()),
        }
    }

    pub fn scale(&self, n: i64) -> GroupValue {
        self.int_scale(&BigInt::from(n))
    }

    /// Least n >= 1 with n * self = 0, or `None` for infinite order.
    pub fn element_order(&self) -> Option<u64> {
        match self {
            GroupValue::Int(a) => a.is_zero().then_some(1),
            GroupValue::Rat(a) => a.is_zero().then_some(1),
            GroupValue::Mod { value, modulus } => Some(modulus / value.gcd(modulus)),
            GroupValue::Tuple(vs) => vs.iter().try_fold(1u64, |acc, v| Some(acc.lcm(&v.element_order()?))),
        }
    }
}

impl fmt::Display for GroupValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupValue::Int(a) => write!(f, "{a}"),
            GroupValue::Rat(a) => {
                if a.is_integer() {
                    write!(f, "{}", a.numer())
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())
                }
            }
            GroupValue::Mod { value, .. } => write!(f, "{value}"),
            GroupValue::Tuple(vs) => {
                write!(f, "(")?;
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl Serialize for GroupValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl std::ops::Add<&GroupValue> for &GroupValue {
    type Output = GroupValue;
    fn add(self, rhs: &GroupValue) -> GroupValue {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl std::ops::Sub<&GroupValue> for &GroupValue {
    type Output = GroupValue;
    fn sub(self, rhs: &GroupValue) -> GroupValue {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}
