//! Text formats for elements and polynomials.
//!
//! ```text
//! poly  := node ("," node)*          ascending degree; "0" is the zero polynomial
//! node  := INT | "(" node* ")"       children separated by whitespace
//! ```
//!
//! A field element of `F_{p^alpha}` is an integer when `alpha = 1`, otherwise the
//! digit tuple `(d_0 ... d_{alpha-1})`. A Galois-ring element is an integer when
//! `m = 1`, otherwise `(c_0 ... c_{m-1})` with `c_j` in `[0, p^t)`. An element of
//! `F_q[u]/(u^t)` is a field element when `t = 1`, otherwise `(a_0 ... a_{t-1})`
//! with each `a_k` a field element.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Node {
    Int(u64),
    List(Vec<Node>),
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn node(&mut self) -> Result<Node> {
        self.skip_ws();
        match self.bytes.get(self.pos) {
            Some(b'(') => {
                self.pos += 1;
                let mut items = Vec::new();
                loop {
                    self.skip_ws();
                    match self.bytes.get(self.pos) {
                        Some(b')') => {
                            self.pos += 1;
                            return Ok(Node::List(items));
                        }
                        None => return Err(Error::Parse("unclosed '('".into())),
                        _ => items.push(self.node()?),
                    }
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
                s.parse()
                    .map(Node::Int)
                    .map_err(|_| Error::Parse(format!("integer {s} out of range")))
            }
            Some(&c) => Err(Error::Parse(format!("unexpected character {:?}", c as char))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

pub(crate) fn parse_node(text: &str) -> Result<Node> {
    let mut cur = Cursor { bytes: text.as_bytes(), pos: 0 };
    let node = cur.node()?;
    cur.skip_ws();
    if cur.pos != cur.bytes.len() {
        return Err(Error::Parse(format!("trailing input in {text:?}")));
    }
    Ok(node)
}

pub(crate) fn parse_poly_nodes(text: &str) -> Result<Vec<Node>> {
    text.split(',').map(parse_node).collect()
}

pub(crate) fn format_poly<I: IntoIterator<Item = String>>(coeffs: I) -> String {
    let parts: Vec<String> = coeffs.into_iter().collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(",")
    }
}
