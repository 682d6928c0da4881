//! Canonical text encoding of coloring values.
//!
//! ```text
//! eta    ::= "Z" | "(" index ":" bits "," bits ")"
//! h      ::= "Z" | "(" bits "," bits ")"
//! xi     ::= "[" entry (";" entry)* "]"
//! color  ::= "{" xi ("|" xi)* "}"            top level first
//! mubayi ::= "0" | "({" x "," y "}:" i ":" a-bits ")"
//! ```
//!
//! Pairs are written smaller-first and the decoder rejects any other order,
//! so every value has exactly one encoding.

use std::fmt::Write;

use super::{BlockPair, EtaValue, HValue, MubayiColor, ProductColor, XiValue};
use crate::error::{Error, Result};
use crate::vectors::{write_bits, BitVector};

/// A value with a canonical text form.
pub trait Canonical: Sized {
    fn write_canonical(&self, out: &mut String);
    fn read_canonical(input: &mut Parser<'_>) -> Result<Self>;
}

pub fn encode<T: Canonical>(value: &T) -> String {
    let mut out = String::new();
    value.write_canonical(&mut out);
    out
}

/// Decodes a complete string; trailing input is an error.
pub fn decode<T: Canonical>(s: &str) -> Result<T> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let value = T::read_canonical(&mut p)?;
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(value)
}

/// Byte cursor used by [`Canonical::read_canonical`].
pub struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(format!("expected {:?}", b as char)))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        if text.is_empty() || (text.len() > 1 && text.starts_with('0')) {
            self.pos = start;
            return Err(self.error("expected a decimal number"));
        }
        text.parse().map_err(|_| Parser { src: self.src, pos: start }.error("number too large"))
    }

    fn bits(&mut self) -> Result<BitVector> {
        let start = self.pos;
        let mut bits = Vec::new();
        while let Some(b) = self.peek() {
            match b {
                b'0' => bits.push(false),
                b'1' => bits.push(true),
                _ => break,
            }
            self.pos += 1;
        }
        BitVector::new(bits).map_err(|_| Parser { src: self.src, pos: start }.error("expected a bit string"))
    }

    fn block_pair(&mut self) -> Result<BlockPair> {
        let start = self.pos;
        let lo = self.bits()?;
        self.expect(b',')?;
        let hi = self.bits()?;
        if lo.len() != hi.len() || lo >= hi {
            return Err(Parser { src: self.src, pos: start }
                .error("pair must hold two distinct equal-length blocks, smaller first"));
        }
        Ok(BlockPair { lo, hi })
    }

    fn sequence<T>(
        &mut self,
        open: u8,
        sep: u8,
        close: u8,
        mut item: impl FnMut(&mut Self) -> Result<T>,
    ) -> Result<Vec<T>> {
        self.expect(open)?;
        let mut items = vec![item(self)?];
        while self.eat(sep) {
            items.push(item(self)?);
        }
        self.expect(close)?;
        Ok(items)
    }
}

fn put_bits(out: &mut String, v: &BitVector) {
    write_bits(out, v.bits()).unwrap();
}

fn put_pair(out: &mut String, pair: &BlockPair) {
    put_bits(out, &pair.lo);
    out.push(',');
    put_bits(out, &pair.hi);
}

impl Canonical for BitVector {
    fn write_canonical(&self, out: &mut String) {
        put_bits(out, self);
    }

    fn read_canonical(input: &mut Parser<'_>) -> Result<Self> {
        input.bits()
    }
}

impl Canonical for EtaValue {
    fn write_canonical(&self, out: &mut String) {
        match self {
            EtaValue::Zero => out.push('Z'),
            EtaValue::Diff { index, pair } => {
                write!(out, "({index}:").unwrap();
                put_pair(out, pair);
                out.push(')');
            }
        }
    }

    fn read_canonical(input: &mut Parser<'_>) -> Result<Self> {
        if input.eat(b'Z') {
            return Ok(EtaValue::Zero);
        }
        input.expect(b'(')?;
        let at = input.pos;
        let index = input.number()?;
        if index == 0 {
            return Err(Parser { src: input.src, pos: at }.error("indices are 1-based"));
        }
        input.expect(b':')?;
        let pair = input.block_pair()?;
        input.expect(b')')?;
        Ok(EtaValue::Diff { index, pair })
    }
}

impl Canonical for HValue {
    fn write_canonical(&self, out: &mut String) {
        match self {
            HValue::Zero => out.push('Z'),
            HValue::Diff(pair) => {
                out.push('(');
                put_pair(out, pair);
                out.push(')');
            }
        }
    }

    fn read_canonical(input: &mut Parser<'_>) -> Result<Self> {
        if input.eat(b'Z') {
            return Ok(HValue::Zero);
        }
        input.expect(b'(')?;
        let pair = input.block_pair()?;
        input.expect(b')')?;
        Ok(HValue::Diff(pair))
    }
}

impl<E: Canonical> Canonical for XiValue<E> {
    fn write_canonical(&self, out: &mut String) {
        out.push('[');
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                out.push(';');
            }
            e.write_canonical(out);
        }
        out.push(']');
    }

    fn read_canonical(input: &mut Parser<'_>) -> Result<Self> {
        input.sequence(b'[', b';', b']', E::read_canonical).map(XiValue)
    }
}

impl<E: Canonical> Canonical for ProductColor<E> {
    fn write_canonical(&self, out: &mut String) {
        out.push('{');
        for (k, xi) in self.0.iter().enumerate() {
            if k > 0 {
                out.push('|');
            }
            xi.write_canonical(out);
        }
        out.push('}');
    }

    fn read_canonical(input: &mut Parser<'_>) -> Result<Self> {
        input.sequence(b'{', b'|', b'}', XiValue::read_canonical).map(ProductColor)
    }
}

impl Canonical for MubayiColor {
    fn write_canonical(&self, out: &mut String) {
        match self {
            MubayiColor::Zero => out.push('0'),
            MubayiColor::Diff { pair: (x, y), index, pattern } => {
                write!(out, "({{{x},{y}}}:{index}:").unwrap();
                write_bits(out, pattern).unwrap();
                out.push(')');
            }
        }
    }

    fn read_canonical(input: &mut Parser<'_>) -> Result<Self> {
        if input.eat(b'0') {
            return Ok(MubayiColor::Zero);
        }
        let start = input.pos;
        input.expect(b'(')?;
        input.expect(b'{')?;
        let x = input.number()?;
        input.expect(b',')?;
        let y = input.number()?;
        input.expect(b'}')?;
        input.expect(b':')?;
        let index = input.number()?;
        input.expect(b':')?;
        let pattern = input.bits()?.bits().to_vec();
        input.expect(b')')?;
        let first = pattern.iter().position(|&b| b).map(|k| k + 1);
        if x == 0 || x >= y || first != Some(index) {
            return Err(Parser { src: input.src, pos: start }
                .error("need 1 <= x < y and index equal to the first set bit of the pattern"));
        }
        let to_symbol =
            |s: usize| u32::try_from(s).map_err(|_| Parser { src: input.src, pos: start }.error("symbol too large"));
        Ok(MubayiColor::Diff { pair: (to_symbol(x)?, to_symbol(y)?), index, pattern })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::{color, xi, Color, HColor};
    use crate::vectors::ResolutionChain;
    use proptest::prelude::*;

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    #[test]
    fn encodes_atoms() {
        let e = EtaValue::Diff { index: 4, pair: BlockPair::new(bv("1"), bv("0")).unwrap() };
        assert_eq!(encode(&e), "(4:0,1)");
        assert_eq!(encode(&EtaValue::Zero), "Z");
        assert_eq!(encode(&HValue::Zero), "Z");
        assert_eq!(encode(&e.to_h()), "(0,1)");
        assert_eq!(encode(&MubayiColor::Zero), "0");
    }

    #[test]
    fn encodes_worked_example() {
        let c: ResolutionChain = "1,2,4".parse().unwrap();
        let (v, w) = (bv("0010110"), bv("0011100"));
        let col = color(&v, &w, &c).unwrap();
        let text = "{[(2:10,11);(1:10,11)]|[Z;(2:0,1);(2:0,1);Z]}";
        assert_eq!(encode(&col), text);
        assert_eq!(decode::<Color>(text).unwrap(), col);
        assert_eq!(encode(&xi(0, &v, &w, &c).unwrap()), "[Z;(2:0,1);(2:0,1);Z]");
        assert_eq!(decode::<HColor>("{[(10,11);(10,11)]|[Z;(0,1);(0,1);Z]}").unwrap(), col.erase_indices());
    }

    #[test]
    fn rejects_malformed_input_with_position() {
        let cases = [
            ("(4:1,0)", 3),  // wrong order
            ("(4:0,11)", 3), // unequal lengths
            ("(0:0,1)", 1),  // zero index
            ("(4:0,1", 6),
            ("Zx", 1),
            ("(04:0,1)", 1),
            ("", 0),
        ];
        for (text, pos) in cases {
            match decode::<EtaValue>(text) {
                Err(Error::Parse { pos: at, .. }) => assert_eq!(at, pos, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        assert!(decode::<Color>("{[Z]|}").is_err());
        assert!(decode::<Color>("{}").is_err());
        assert!(decode::<MubayiColor>("({3,2}:1:10)").is_err());
        assert!(decode::<MubayiColor>("({2,3}:2:10)").is_err());
    }

    #[test]
    fn mubayi_round_trip() {
        let text = "({2,3}:2:01)";
        let value = decode::<MubayiColor>(text).unwrap();
        assert_eq!(value, MubayiColor::Diff { pair: (2, 3), index: 2, pattern: vec![false, true] });
        assert_eq!(encode(&value), text);
    }

    proptest! {
        #[test]
        fn colors_round_trip(bits in prop::collection::vec(any::<(bool, bool)>(), 1..20)) {
            let c: ResolutionChain = "1,2,4,8".parse().unwrap();
            let v = BitVector::new(bits.iter().map(|b| b.0).collect()).unwrap();
            let w = BitVector::new(bits.iter().map(|b| b.1).collect()).unwrap();
            let col = color(&v, &w, &c).unwrap();
            let text = encode(&col);
            prop_assert_eq!(decode::<Color>(&text).unwrap(), col.clone());
            let hcol = col.erase_indices();
            prop_assert_eq!(encode(&decode::<HColor>(&encode(&hcol)).unwrap()), encode(&hcol));
        }
    }
}
