//! Domain specifications for the four classical families.
//!
//! Compact string format used by the CLI and config files:
//! `"I(2,3)"`, `"IV(5)"`, products `"I(1,1)^3"`, `"II(4)xIII(2)"`.

use std::fmt;
use std::str::FromStr;

use crate::Error;

/// One irreducible classical factor.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum FactorType {
    /// `I(p,q)`: p×q matrix domain, dim pq, rank min(p,q).
    I { p: usize, q: usize },
    /// `II(n)`: antisymmetric n×n, dim n(n−1)/2, rank ⌊n/2⌋.
    II { n: usize },
    /// `III(n)`: symmetric n×n, dim n(n+1)/2, rank n.
    III { n: usize },
    /// `IV(n)`: quadric type, dim n, rank 2.
    IV { n: usize },
}

impl FactorType {
    pub fn validate(&self) -> Result<(), Error> {
        let ok = match *self {
            FactorType::I { p, q } => p >= 1 && q >= 1,
            FactorType::II { n } => n >= 2,
            FactorType::III { n } => n >= 1,
            FactorType::IV { n } => n >= 3,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedSpec(format!("invalid parameters in {self}")))
        }
    }

    /// Complex dimension of the factor.
    pub fn dim(&self) -> usize {
        match *self {
            FactorType::I { p, q } => p * q,
            FactorType::II { n } => n * (n - 1) / 2,
            FactorType::III { n } => n * (n + 1) / 2,
            FactorType::IV { n } => n,
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            FactorType::I { p, q } => p.min(q),
            FactorType::II { n } => n / 2,
            FactorType::III { n } => n,
            FactorType::IV { .. } => 2,
        }
    }

    /// Ambient matrix size of the factor's model.
    pub fn ambient(&self) -> usize {
        match *self {
            FactorType::I { p, q } => p + q,
            FactorType::II { n } | FactorType::III { n } => 2 * n,
            FactorType::IV { n } => n + 2,
        }
    }
}

impl fmt::Display for FactorType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FactorType::I { p, q } => write!(f, "I({p},{q})"),
            FactorType::II { n } => write!(f, "II({n})"),
            FactorType::III { n } => write!(f, "III({n})"),
            FactorType::IV { n } => write!(f, "IV({n})"),
        }
    }
}

/// A product of irreducible factors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DomainSpec {
    pub factors: Vec<FactorType>,
}

impl DomainSpec {
    pub fn new(factors: Vec<FactorType>) -> Result<Self, Error> {
        if factors.is_empty() {
            return Err(Error::UnsupportedSpec("empty domain spec".into()));
        }
        for fac in &factors {
            fac.validate()?;
        }
        Ok(DomainSpec { factors })
    }

    pub fn irreducible(f: FactorType) -> Result<Self, Error> {
        DomainSpec::new(vec![f])
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(FactorType::dim).sum()
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(FactorType::rank).sum()
    }

    pub fn ambient(&self) -> usize {
        self.factors.iter().map(FactorType::ambient).sum()
    }
}

impl fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

fn parse_factor(s: &str) -> Result<FactorType, Error> {
    let s = s.trim();
    let err = || Error::Parse(format!("invalid factor `{s}`"));
    let open = s.find('(').ok_or_else(err)?;
    if !s.ends_with(')') {
        return Err(err());
    }
    let ty = &s[..open];
    let args = &s[open + 1..s.len() - 1];
    let nums: Vec<usize> = args
        .split(',')
        .map(|a| a.trim().parse::<usize>().map_err(|_| err()))
        .collect::<Result<_, _>>()?;
    let fac = match (ty, nums.as_slice()) {
        ("I", [p, q]) => FactorType::I { p: *p, q: *q },
        ("II", [n]) => FactorType::II { n: *n },
        ("III", [n]) => FactorType::III { n: *n },
        ("IV", [n]) => FactorType::IV { n: *n },
        _ => return Err(err()),
    };
    fac.validate()?;
    Ok(fac)
}

impl FromStr for DomainSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut factors = Vec::new();
        for part in s.split('x') {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::Parse(format!("invalid domain spec `{s}`")));
            }
            let (body, power) = match part.split_once('^') {
                Some((b, p)) => {
                    let k: usize = p
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("invalid power in `{part}`")))?;
                    if k == 0 {
                        return Err(Error::Parse(format!("zero power in `{part}`")));
                    }
                    (b, k)
                }
                None => (part, 1),
            };
            let fac = parse_factor(body)?;
            for _ in 0..power {
                factors.push(fac);
            }
        }
        DomainSpec::new(factors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let s: DomainSpec = "I(2,3)".parse().unwrap();
        assert_eq!(s.dim(), 6);
        assert_eq!(s.rank(), 2);
        let s: DomainSpec = "I(1,1)^3".parse().unwrap();
        assert_eq!(s.factors.len(), 3);
        assert_eq!(s.dim(), 3);
        let s: DomainSpec = "II(4)xIII(2)".parse().unwrap();
        assert_eq!(s.factors.len(), 2);
        assert_eq!(s.dim(), 6 + 3);
        assert_eq!(s.to_string(), "II(4)xIII(2)");
    }

    #[test]
    fn dimension_table() {
        assert_eq!(FactorType::III { n: 2 }.dim(), 3);
        assert_eq!(FactorType::III { n: 2 }.rank(), 2);
        assert_eq!(FactorType::IV { n: 3 }.dim(), 3);
        assert_eq!(FactorType::IV { n: 3 }.rank(), 2);
        assert_eq!(FactorType::II { n: 6 }.dim(), 15);
        assert_eq!(FactorType::II { n: 6 }.rank(), 3);
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!("I(0,2)".parse::<DomainSpec>().is_err());
        assert!("IV(2)".parse::<DomainSpec>().is_err());
        assert!("II(1)".parse::<DomainSpec>().is_err());
        assert!("V(3)".parse::<DomainSpec>().is_err());
        assert!("I(2,2)^0".parse::<DomainSpec>().is_err());
    }
}
