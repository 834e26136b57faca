//! Group descriptions accepted on the command line.
//!
//! ```text
//! perm:(1 2 3)(4 5);(1 2)                   cycles per generator, points from 1
//! pc:orders=[2,4];pow:0->[0,2];conj:1,0->[0,3]
//! Q8  D8  SL23  H:1 .. H:9  G:3@p=5  G:8@p=5,d=3
//! T2:p=7,r=2  T3:p=5  P3:p=3,v=1  cyclic:12  abelian:2,4,8
//! ```
//!
//! In `pc:` words are exponent vectors over all generators; `pow:i->w` reads
//! `g_i^{m_i} = w` and `conj:j,i->w` reads `g_i^-1 g_j g_i = w`.

use std::fmt;

use shoda_core::arith::{gcd, mult_order};
use shoda_core::families::{construct, FamilySpec};
use shoda_core::group::{cycles_to_images, Group, PcPresentation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub text: String,
    /// Byte offset of the offending input.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let column = self.text[..self.position.min(self.text.len())].chars().count();
        writeln!(out, "{} at column {}", self.message, column + 1)?;
        writeln!(out, "  {}", self.text)?;
        write!(out, "  {}^", " ".repeat(column))
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug)]
pub enum GroupSpec {
    Family(FamilySpec),
    Perm { degree: usize, generators: Vec<Vec<Vec<u32>>> },
    Pc(PcPresentation),
}

impl GroupSpec {
    pub fn build(&self, cap: usize) -> shoda_core::Result<Group> {
        match self {
            GroupSpec::Family(f) => construct(f, cap),
            GroupSpec::Perm { degree, generators } => {
                let images: Vec<Vec<u32>> = generators.iter().map(|c| cycles_to_images(c, *degree)).collect();
                Group::from_permutations(*degree, &images, cap)
            }
            GroupSpec::Pc(p) => p.build(cap),
        }
    }

    pub fn generator_count(&self) -> Option<usize> {
        match self {
            GroupSpec::Family(_) => None,
            GroupSpec::Perm { generators, .. } => Some(generators.len()),
            GroupSpec::Pc(p) => Some(p.relative_orders().len()),
        }
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, pos: usize) -> Self {
        Cursor { text, pos }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn error_at(&self, position: usize, message: impl Into<String>) -> ParseError {
        ParseError { text: self.text.to_string(), position, message: message.into() }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos, message)
    }

    fn skip_spaces(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected a number"));
        }
        let start = self.pos;
        self.pos += digits;
        self.text[start..self.pos].parse().map_err(|_| self.error_at(start, "number out of range"))
    }

    fn word(&mut self) -> &'a str {
        let len = self.rest().bytes().take_while(u8::is_ascii_alphabetic).count();
        let w = &self.rest()[..len];
        self.pos += len;
        w
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_spaces();
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    /// `[a,b,...]`
    fn list(&mut self) -> Result<Vec<u64>, ParseError> {
        self.expect("[")?;
        let mut out = Vec::new();
        if self.eat("]") {
            return Ok(out);
        }
        loop {
            self.skip_spaces();
            out.push(self.number()?);
            self.skip_spaces();
            if self.eat("]") {
                return Ok(out);
            }
            self.expect(",")?;
        }
    }

    /// `k=v,k=v,...` up to the end of input.
    fn params(&mut self, allowed: &[&str]) -> Result<Vec<(&'a str, u64, usize)>, ParseError> {
        let mut out: Vec<(&str, u64, usize)> = Vec::new();
        loop {
            let start = self.pos;
            let key = self.word();
            if !allowed.contains(&key) {
                let expected = allowed.iter().map(|k| format!("`{k}`")).collect::<Vec<_>>().join(" or ");
                return Err(self.error_at(start, format!("expected parameter {expected}")));
            }
            if out.iter().any(|(k, _, _)| *k == key) {
                return Err(self.error_at(start, format!("parameter `{key}` given twice")));
            }
            self.expect("=")?;
            let value = self.number()?;
            out.push((key, value, start));
            if !self.eat(",") {
                return Ok(out);
            }
        }
    }
}

fn required(c: &Cursor<'_>, params: &[(&str, u64, usize)], key: &str) -> Result<u64, ParseError> {
    params
        .iter()
        .find(|(k, _, _)| *k == key)
        .map(|&(_, v, _)| v)
        .ok_or_else(|| c.error(format!("missing parameter `{key}`")))
}

fn optional(params: &[(&str, u64, usize)], key: &str) -> Option<(u64, usize)> {
    params.iter().find(|(k, _, _)| *k == key).map(|&(_, v, p)| (v, p))
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let mut c = Cursor::new(text, 0);
    c.skip_spaces();
    let spec = if c.eat("perm:") {
        parse_perm(&mut c)?
    } else if c.eat("pc:") {
        parse_pc(&mut c)?
    } else {
        GroupSpec::Family(parse_family(&mut c)?)
    };
    c.finish()?;
    if let GroupSpec::Family(f) = &spec {
        f.validate().map_err(|e| c.error_at(0, e.to_string()))?;
    }
    Ok(spec)
}

fn parse_perm(c: &mut Cursor<'_>) -> Result<GroupSpec, ParseError> {
    let mut generators = Vec::new();
    let mut degree = 0usize;
    loop {
        c.skip_spaces();
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut used: Vec<u64> = Vec::new();
        if c.peek() != Some('(') {
            return Err(c.error("expected a cycle `(`"));
        }
        while c.eat("(") {
            let mut cycle = Vec::new();
            loop {
                c.skip_spaces();
                if c.eat(")") {
                    break;
                }
                let start = c.pos;
                let point = c.number()?;
                if point == 0 || point > u32::MAX as u64 {
                    return Err(c.error_at(start, "points are numbered from 1"));
                }
                if used.contains(&point) {
                    return Err(c.error_at(start, format!("point {point} repeated in one generator")));
                }
                used.push(point);
                degree = degree.max(point as usize);
                cycle.push(point as u32);
                c.skip_spaces();
                c.eat(",");
            }
            cycles.push(cycle);
            c.skip_spaces();
        }
        generators.push(cycles);
        if !c.eat(";") {
            break;
        }
    }
    Ok(GroupSpec::Perm { degree: degree.max(1), generators })
}

fn word_of(c: &Cursor<'_>, exps: Vec<u64>, k: usize, start: usize) -> Result<Vec<(usize, i64)>, ParseError> {
    if exps.len() != k {
        return Err(c.error_at(start, format!("word has {} exponents, expected {k}", exps.len())));
    }
    let exps: Vec<u32> = exps
        .into_iter()
        .map(|e| u32::try_from(e).map_err(|_| c.error_at(start, "exponent out of range")))
        .collect::<Result<_, _>>()?;
    Ok(PcPresentation::exponent_word(&exps))
}

fn parse_pc(c: &mut Cursor<'_>) -> Result<GroupSpec, ParseError> {
    c.expect("orders=")?;
    let start = c.pos;
    let orders = c.list()?;
    let orders: Vec<u32> = orders
        .into_iter()
        .map(|m| match u32::try_from(m) {
            Ok(m) if m >= 2 => Ok(m),
            _ => Err(c.error_at(start, "relative orders must lie in 2..2^32")),
        })
        .collect::<Result<_, _>>()?;
    let k = orders.len();
    let mut pc = PcPresentation::new(&orders);
    while c.eat(";") {
        c.skip_spaces();
        let rel_start = c.pos;
        if c.eat("pow:") {
            let i = c.number()? as usize;
            if i >= k {
                return Err(c.error_at(rel_start, format!("no generator {i}")));
            }
            c.expect("->")?;
            let w_start = c.pos;
            let w = c.list()?;
            let w = word_of(c, w, k, w_start)?;
            if w.iter().any(|&(g, _)| g <= i) {
                return Err(c.error_at(w_start, format!("power of g{i} must be a word in later generators")));
            }
            pc = pc.power(i, w);
        } else if c.eat("conj:") {
            let j = c.number()? as usize;
            c.expect(",")?;
            let i = c.number()? as usize;
            if j >= k || i >= j {
                return Err(c.error_at(rel_start, "conjugation needs generators j > i"));
            }
            c.expect("->")?;
            let w_start = c.pos;
            let w = c.list()?;
            let w = word_of(c, w, k, w_start)?;
            if w.iter().any(|&(g, _)| g <= i) {
                return Err(c.error_at(w_start, format!("conjugate under g{i} must be a word in later generators")));
            }
            pc = pc.conjugate(j, i, w);
        } else {
            return Err(c.error("expected `pow:` or `conj:`"));
        }
    }
    Ok(GroupSpec::Pc(pc))
}

const FAMILY_NAMES: &str = "Q8, D8, SL23, H:i, G:i@p=.., T2:p=..,r=.., T3:p=.., P3:p=..,v=.., cyclic:n, abelian:n,m,..";

fn parse_family(c: &mut Cursor<'_>) -> Result<FamilySpec, ParseError> {
    let start = c.pos;
    let name_len = c.rest().bytes().take_while(|b| b.is_ascii_alphanumeric()).count();
    let name = &c.rest()[..name_len];
    c.pos += name_len;
    let spec = match name {
        "Q8" => FamilySpec::Q8,
        "D8" => FamilySpec::D8,
        "SL23" => FamilySpec::Sl23,
        "H" => {
            c.expect(":")?;
            let i = c.number()?;
            FamilySpec::H(u8::try_from(i).map_err(|_| c.error("index out of range"))?)
        }
        "G" => {
            c.expect(":")?;
            let i = c.number()?;
            let i = u8::try_from(i).map_err(|_| c.error("index out of range"))?;
            c.expect("@")?;
            let params = c.params(&["p", "d"])?;
            let p = required(c, &params, "p")?;
            let d = optional(&params, "d");
            if let (Some((_, pos)), false) = (d, i == 8) {
                return Err(c.error_at(pos, "only G:8 takes `d`"));
            }
            FamilySpec::G { i, p, d: d.map(|(v, _)| v) }
        }
        "T2" => {
            c.expect(":")?;
            let params = c.params(&["p", "r", "s"])?;
            let p = required(c, &params, "p")?;
            let r = required(c, &params, "r")?;
            if let Some((s, pos)) = optional(&params, "s") {
                let o = if gcd(p, r) == 1 { mult_order(p, r).ok() } else { None };
                if o != Some(s) {
                    return Err(c.error_at(pos, "s must equal the order of r modulo p"));
                }
            }
            FamilySpec::T2 { p, r }
        }
        "T3" => {
            c.expect(":")?;
            let params = c.params(&["p"])?;
            FamilySpec::T3 { p: required(c, &params, "p")? }
        }
        "P3" => {
            c.expect(":")?;
            let params = c.params(&["p", "v"])?;
            let p = required(c, &params, "p")?;
            let v = required(c, &params, "v")?;
            FamilySpec::P3Odd { p, variant: u8::try_from(v).map_err(|_| c.error("variant out of range"))? }
        }
        "cyclic" => {
            c.expect(":")?;
            FamilySpec::Cyclic(c.number()?)
        }
        "abelian" => {
            c.expect(":")?;
            let mut factors = vec![c.number()?];
            while c.eat(",") {
                factors.push(c.number()?);
            }
            FamilySpec::Abelian(factors)
        }
        _ => return Err(c.error_at(start, format!("unknown group; expected perm:, pc: or one of {FAMILY_NAMES}"))),
    };
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names() {
        assert!(matches!(parse_group_spec("Q8"), Ok(GroupSpec::Family(FamilySpec::Q8))));
        assert!(matches!(parse_group_spec("H:9"), Ok(GroupSpec::Family(FamilySpec::H(9)))));
        assert!(matches!(
            parse_group_spec("G:3@p=5"),
            Ok(GroupSpec::Family(FamilySpec::G { i: 3, p: 5, d: None }))
        ));
        assert!(matches!(
            parse_group_spec("G:8@p=5,d=3"),
            Ok(GroupSpec::Family(FamilySpec::G { i: 8, p: 5, d: Some(3) }))
        ));
        assert!(matches!(parse_group_spec("T3:p=5"), Ok(GroupSpec::Family(FamilySpec::T3 { p: 5 }))));
        let GroupSpec::Family(FamilySpec::Abelian(v)) = parse_group_spec("abelian:2,4,8").unwrap() else {
            panic!("abelian")
        };
        assert_eq!(v, vec![2, 4, 8]);
    }

    #[test]
    fn t2_infers_s() {
        let spec = parse_group_spec("T2:p=7,r=2").unwrap();
        let GroupSpec::Family(f) = &spec else { panic!("family") };
        assert_eq!(f.order(), Some(2 * 3 * 49));
        assert!(parse_group_spec("T2:p=7,r=2,s=3").is_ok());
        let e = parse_group_spec("T2:p=7,r=2,s=6").unwrap_err();
        assert_eq!(e.position, 11);
    }

    #[test]
    fn permutations() {
        let spec = parse_group_spec("perm:(1 2 3);(1 2)").unwrap();
        assert_eq!(spec.generator_count(), Some(2));
        assert_eq!(spec.build(100).unwrap().order(), 6);
        let s4 = parse_group_spec("perm:(1,2,3,4);(1,2)").unwrap();
        assert_eq!(s4.build(100).unwrap().order(), 24);
        let e = parse_group_spec("perm:(1 2 1)").unwrap_err();
        assert_eq!(e.position, 10);
        assert!(parse_group_spec("perm:(0 1)").is_err());
    }

    #[test]
    fn polycyclic() {
        let spec = parse_group_spec("pc:orders=[2,4];pow:0->[0,2];conj:1,0->[0,3]").unwrap();
        let g = spec.build(100).unwrap();
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
        let e = parse_group_spec("pc:orders=[2,4];pow:0->[0,2,1]").unwrap_err();
        assert_eq!(e.position, 23);
        assert!(parse_group_spec("pc:orders=[2,4];conj:0,1->[0,1]").is_err());
        assert!(parse_group_spec("pc:orders=[2,4];pow:1->[1,0]").is_err());
    }

    #[test]
    fn diagnostics_carry_positions() {
        let e = parse_group_spec("H:1x").unwrap_err();
        assert_eq!(e.position, 3);
        assert!(e.to_string().contains("column 4"));
        let e = parse_group_spec("Q9").unwrap_err();
        assert_eq!(e.position, 0);
        let e = parse_group_spec("G:3@q=5").unwrap_err();
        assert_eq!(e.position, 4);
        assert!(parse_group_spec("H:10").is_err());
    }
}
