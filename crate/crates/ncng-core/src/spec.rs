//! The group construction DSL: abstract syntax, parser and the canonical
//! whitespace-free rendering.
//!
//! Atoms: `C(n)`, `D(n)` (order 2n), `S(n)`, `A(n)`, `Q8`, `SL23`,
//! `AGL(1,p)`, `SzP(k)`, `SzB(k,r)`, `Perm[(cycles);(cycles);...]` with
//! 1-based points. Combinators: `x` for direct products and
//! `SD(N=...,H=...,act=[...])` for semidirect products, where `act` gives
//! one automorphism of N per generator of H as a `,`-separated list of
//! images of N's generators, each image a word like `n1^2*n2` in N's
//! generators; automorphisms are `;`-separated.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("syntax error at byte {pos}: expected {expected}")]
pub struct ParseError {
    pub pos: usize,
    pub expected: String,
}

/// One factor of an action word: (1-based generator index, exponent >= 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenWord(pub Vec<(u32, u32)>);

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (g, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "n{g}")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(u32),
    /// Dihedral group of order 2n.
    Dihedral(u32),
    Symmetric(u32),
    Alternating(u32),
    Quaternion8,
    SpecialLinear23,
    /// AGL(1,p) for prime p: affine maps x -> ax + b over GF(p).
    Affine(u32),
    /// Suzuki 2-group of order 2^(2k).
    SuzukiP(u32),
    /// Suzuki Borel-type group SzP(k) . C_r with r | 2^k - 1.
    SuzukiBorel(u32, u32),
    /// Explicit permutation group; each generator is a list of cycles on
    /// 1-based points.
    Perm(Vec<Vec<Vec<u32>>>),
    /// Direct product of two or more factors, kept flat: `x` is
    /// associative and the grammar has no grouping, so the factor list is
    /// the canonical form.
    Direct(Vec<GroupSpec>),
    Semidirect {
        normal: Box<GroupSpec>,
        complement: Box<GroupSpec>,
        /// One automorphism per generator of the complement; each is the
        /// list of images of the normal subgroup's generators.
        action: Vec<Vec<GenWord>>,
    },
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec, ParseError> {
        let mut p = Parser {
            bytes: text.as_bytes(),
            pos: 0,
        };
        let spec = p.product()?;
        if p.pos != p.bytes.len() {
            return Err(p.err("end of input"));
        }
        Ok(spec)
    }

    /// Canonical whitespace-free rendering; `parse` of this string returns
    /// an equal spec.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C({n})"),
            GroupSpec::Dihedral(n) => write!(f, "D({n})"),
            GroupSpec::Symmetric(n) => write!(f, "S({n})"),
            GroupSpec::Alternating(n) => write!(f, "A({n})"),
            GroupSpec::Quaternion8 => write!(f, "Q8"),
            GroupSpec::SpecialLinear23 => write!(f, "SL23"),
            GroupSpec::Affine(p) => write!(f, "AGL(1,{p})"),
            GroupSpec::SuzukiP(k) => write!(f, "SzP({k})"),
            GroupSpec::SuzukiBorel(k, r) => write!(f, "SzB({k},{r})"),
            GroupSpec::Perm(perms) => {
                write!(f, "Perm[")?;
                for (i, cycles) in perms.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    for cycle in cycles {
                        write!(f, "(")?;
                        for (j, pt) in cycle.iter().enumerate() {
                            if j > 0 {
                                write!(f, ",")?;
                            }
                            write!(f, "{pt}")?;
                        }
                        write!(f, ")")?;
                    }
                }
                write!(f, "]")
            }
            GroupSpec::Direct(parts) => {
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "{part}")?;
                }
                Ok(())
            }
            GroupSpec::Semidirect {
                normal,
                complement,
                action,
            } => {
                write!(f, "SD(N={normal},H={complement},act=[")?;
                for (i, auto) in action.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    for (j, word) in auto.iter().enumerate() {
                        if j > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{word}")?;
                    }
                }
                write!(f, "])")
            }
        }
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, expected: &str) -> ParseError {
        ParseError {
            pos: self.pos,
            expected: expected.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> Result<(), ParseError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("'{}'", b as char)))
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        if self.bytes[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParseError {
                pos: start,
                expected: "integer in range".to_string(),
            })
    }

    fn product(&mut self) -> Result<GroupSpec, ParseError> {
        let first = self.primary()?;
        if self.peek() != Some(b'x') {
            return Ok(first);
        }
        let mut parts = vec![first];
        while self.peek() == Some(b'x') {
            self.pos += 1;
            parts.push(self.primary()?);
        }
        Ok(GroupSpec::Direct(parts))
    }

    fn primary(&mut self) -> Result<GroupSpec, ParseError> {
        if self.eat_str("Q8") {
            return Ok(GroupSpec::Quaternion8);
        }
        if self.eat_str("SL23") {
            return Ok(GroupSpec::SpecialLinear23);
        }
        if self.eat_str("AGL(1,") {
            let p = self.int()?;
            self.eat(b')')?;
            return Ok(GroupSpec::Affine(p));
        }
        if self.eat_str("SzP(") {
            let k = self.int()?;
            self.eat(b')')?;
            return Ok(GroupSpec::SuzukiP(k));
        }
        if self.eat_str("SzB(") {
            let k = self.int()?;
            self.eat(b',')?;
            let r = self.int()?;
            self.eat(b')')?;
            return Ok(GroupSpec::SuzukiBorel(k, r));
        }
        if self.eat_str("SD(N=") {
            let normal = self.product()?;
            if !self.eat_str(",H=") {
                return Err(self.err("',H='"));
            }
            let complement = self.product()?;
            if !self.eat_str(",act=[") {
                return Err(self.err("',act=['"));
            }
            let mut action = vec![self.auto()?];
            while self.peek() == Some(b';') {
                self.pos += 1;
                action.push(self.auto()?);
            }
            self.eat(b']')?;
            self.eat(b')')?;
            return Ok(GroupSpec::Semidirect {
                normal: Box::new(normal),
                complement: Box::new(complement),
                action,
            });
        }
        if self.eat_str("Perm[") {
            let mut perms = vec![self.cycles()?];
            while self.peek() == Some(b';') {
                self.pos += 1;
                perms.push(self.cycles()?);
            }
            self.eat(b']')?;
            return Ok(GroupSpec::Perm(perms));
        }
        let kind = match self.peek() {
            Some(b'C') => GroupSpec::Cyclic as fn(u32) -> GroupSpec,
            Some(b'D') => GroupSpec::Dihedral,
            Some(b'S') => GroupSpec::Symmetric,
            Some(b'A') => GroupSpec::Alternating,
            _ => return Err(self.err("a group atom")),
        };
        self.pos += 1;
        self.eat(b'(')?;
        let n = self.int()?;
        self.eat(b')')?;
        Ok(kind(n))
    }

    fn auto(&mut self) -> Result<Vec<GenWord>, ParseError> {
        let mut images = vec![self.word()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            images.push(self.word()?);
        }
        Ok(images)
    }

    fn word(&mut self) -> Result<GenWord, ParseError> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(b'*') {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(GenWord(factors))
    }

    fn factor(&mut self) -> Result<(u32, u32), ParseError> {
        self.eat(b'n')?;
        let g = self.int()?;
        if g == 0 {
            return Err(self.err("1-based generator index"));
        }
        let e = if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.int()?;
            if e == 0 {
                return Err(self.err("exponent >= 1"));
            }
            e
        } else {
            1
        };
        Ok((g, e))
    }

    fn cycles(&mut self) -> Result<Vec<Vec<u32>>, ParseError> {
        let mut cycles = Vec::new();
        while self.peek() == Some(b'(') {
            self.pos += 1;
            let mut cycle = vec![self.int()?];
            while self.peek() == Some(b',') {
                self.pos += 1;
                cycle.push(self.int()?);
            }
            self.eat(b')')?;
            cycles.push(cycle);
        }
        if cycles.is_empty() {
            return Err(self.err("'(' starting a cycle"));
        }
        Ok(cycles)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_atoms() {
        assert_eq!(GroupSpec::parse("S(4)").unwrap(), GroupSpec::Symmetric(4));
        assert_eq!(GroupSpec::parse("Q8").unwrap(), GroupSpec::Quaternion8);
        assert_eq!(GroupSpec::parse("AGL(1,5)").unwrap(), GroupSpec::Affine(5));
        assert_eq!(
            GroupSpec::parse("SzB(3,7)").unwrap(),
            GroupSpec::SuzukiBorel(3, 7)
        );
    }

    #[test]
    fn parses_products_as_flat_lists() {
        let spec = GroupSpec::parse("C(2)xC(2)xS(3)").unwrap();
        assert_eq!(
            spec,
            GroupSpec::Direct(vec![
                GroupSpec::Cyclic(2),
                GroupSpec::Cyclic(2),
                GroupSpec::Symmetric(3),
            ])
        );
        assert_eq!(spec.render(), "C(2)xC(2)xS(3)");
    }

    #[test]
    fn parses_semidirect_with_action() {
        let spec = GroupSpec::parse("SD(N=C(3),H=S(3),act=[n1^2;n1])").unwrap();
        match &spec {
            GroupSpec::Semidirect { action, .. } => {
                assert_eq!(action.len(), 2);
                assert_eq!(action[0], vec![GenWord(vec![(1, 2)])]);
                assert_eq!(action[1], vec![GenWord(vec![(1, 1)])]);
            }
            other => panic!("unexpected parse: {other:?}"),
        }
        assert_eq!(spec.render(), "SD(N=C(3),H=S(3),act=[n1^2;n1])");
    }

    #[test]
    fn parses_perm_atom() {
        let spec = GroupSpec::parse("Perm[(1,2);(1,2,3)(4,5)]").unwrap();
        assert_eq!(
            spec,
            GroupSpec::Perm(vec![
                vec![vec![1, 2]],
                vec![vec![1, 2, 3], vec![4, 5]],
            ])
        );
        assert_eq!(spec.render(), "Perm[(1,2);(1,2,3)(4,5)]");
    }

    #[test]
    fn rejects_trailing_garbage_with_position() {
        let err = GroupSpec::parse("S(4)y").unwrap_err();
        assert_eq!(err.pos, 4);
        let err = GroupSpec::parse("SD(N=C(3),H=C(2))").unwrap_err();
        assert!(err.pos > 0);
    }

    fn atom_strategy() -> impl Strategy<Value = GroupSpec> {
        prop_oneof![
            (1u32..9).prop_map(GroupSpec::Cyclic),
            (1u32..9).prop_map(GroupSpec::Dihedral),
            (1u32..6).prop_map(GroupSpec::Symmetric),
            (1u32..6).prop_map(GroupSpec::Alternating),
            Just(GroupSpec::Quaternion8),
            Just(GroupSpec::SpecialLinear23),
            Just(GroupSpec::Affine(5)),
            Just(GroupSpec::SuzukiP(3)),
            Just(GroupSpec::SuzukiBorel(3, 7)),
            proptest::collection::vec(
                proptest::collection::vec(
                    proptest::collection::vec(1u32..9, 2..4),
                    1..3
                ),
                1..3
            )
            .prop_map(GroupSpec::Perm),
        ]
    }

    fn sd_strategy(
        inner: impl Strategy<Value = GroupSpec> + Clone,
    ) -> impl Strategy<Value = GroupSpec> {
        (
            inner.clone(),
            inner,
            proptest::collection::vec(
                proptest::collection::vec(
                    proptest::collection::vec((1u32..4, 1u32..5), 1..3).prop_map(GenWord),
                    1..3,
                ),
                1..3,
            ),
        )
            .prop_map(|(n, h, action)| GroupSpec::Semidirect {
                normal: Box::new(n),
                complement: Box::new(h),
                action,
            })
    }

    fn spec_strategy() -> impl Strategy<Value = GroupSpec> {
        atom_strategy().prop_recursive(3, 16, 4, |inner| {
            // Direct-product members cannot themselves be products: the
            // grammar has no grouping, so the flat list is canonical.
            let non_direct = prop_oneof![atom_strategy(), sd_strategy(inner.clone())];
            prop_oneof![
                proptest::collection::vec(non_direct, 2..4).prop_map(GroupSpec::Direct),
                sd_strategy(inner),
            ]
        })
    }

    proptest! {
        #[test]
        fn render_parse_roundtrip(spec in spec_strategy()) {
            let text = spec.render();
            let parsed = GroupSpec::parse(&text).unwrap();
            prop_assert_eq!(parsed, spec);
        }
    }
}
