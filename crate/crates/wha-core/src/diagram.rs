//! A term language for string diagrams and its evaluation into linear maps.
//!
//! Terms are usually written in a compact text syntax:
//!
//! * juxtaposition is composition, applied right to left: `mu (mu x 1)`;
//! * ` x ` (or `⊗`) is the tensor product and binds more loosely than
//!   juxtaposition, so `(1 x ci delta x 1)` tensors `ci ∘ delta` in the middle;
//! * `1` is the identity of the default object, `1[M N]` of `M ⊗ N`;
//! * `c[X,Y]` is the braiding `X⊗Y -> Y⊗X`, `ci[X,Y]` its inverse
//!   `Y⊗X -> X⊗Y`; bare `c`/`ci` use the default object twice;
//! * `ev[X]: X*⊗X -> I` and `coev[X]: I -> X⊗X*`; `X*` names the dual of `X`;
//! * any other identifier is a generator bound in the environment.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact_linear::{
    braiding, braiding_inv, compose, dual_space, tensor, Bicharacter, Difference, LinMap, Space,
};
use crate::scalar::Scalar;

/// A tensor word of object names.
pub type ObjWord = Vec<String>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorExpr {
    Gen(String),
    Id(ObjWord),
    /// `Compose([h, g, f]) = h ∘ g ∘ f`: the innermost map is listed last.
    Compose(Vec<MorExpr>),
    Tensor(Vec<MorExpr>),
    Braid(ObjWord, ObjWord),
    BraidInv(ObjWord, ObjWord),
    Eval(String),
    Coeval(String),
}

fn word_to_string(w: &ObjWord) -> String {
    w.join(" ")
}

impl fmt::Display for MorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorExpr::Gen(n) => f.write_str(n),
            MorExpr::Id(w) => write!(f, "1[{}]", word_to_string(w)),
            MorExpr::Compose(parts) => {
                let s: Vec<String> = parts.iter().map(|p| format!("({p})")).collect();
                f.write_str(&s.join(""))
            }
            MorExpr::Tensor(parts) => {
                let s: Vec<String> = parts.iter().map(|p| format!("{p}")).collect();
                write!(f, "({})", s.join(" x "))
            }
            MorExpr::Braid(a, b) => write!(f, "c[{},{}]", word_to_string(a), word_to_string(b)),
            MorExpr::BraidInv(a, b) => {
                write!(f, "ci[{},{}]", word_to_string(a), word_to_string(b))
            }
            MorExpr::Eval(x) => write!(f, "ev[{x}]"),
            MorExpr::Coeval(x) => write!(f, "coev[{x}]"),
        }
    }
}

/// Names, spaces and maps against which terms are evaluated.
#[derive(Clone, Debug)]
pub struct Env<S> {
    pub objects: BTreeMap<String, Space>,
    pub generators: BTreeMap<String, LinMap<S>>,
    pub chi: Bicharacter<S>,
    pub default_object: Option<String>,
}

impl<S: Scalar> Env<S> {
    pub fn new(chi: Bicharacter<S>) -> Self {
        Env {
            objects: BTreeMap::new(),
            generators: BTreeMap::new(),
            chi,
            default_object: None,
        }
    }

    pub fn object(mut self, name: &str, space: &Space) -> Self {
        if self.default_object.is_none() {
            self.default_object = Some(name.to_string());
        }
        self.objects.insert(name.to_string(), space.clone());
        self
    }

    pub fn generator(mut self, name: &str, map: &LinMap<S>) -> Self {
        self.generators.insert(name.to_string(), map.clone());
        self
    }

    pub fn set_generator(&mut self, name: &str, map: LinMap<S>) {
        self.generators.insert(name.to_string(), map);
    }

    fn resolve_object(&self, name: &str) -> Result<Space> {
        if let Some(base) = name.strip_suffix('*') {
            let x = self.resolve_object(base)?;
            return Ok(dual_space::<S>(&x).space);
        }
        if name == "I" {
            return Ok(Space::unit(self.chi.group()));
        }
        self.objects
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn resolve_word(&self, w: &ObjWord) -> Result<Space> {
        let mut acc = Space::unit(self.chi.group());
        for name in w {
            acc = acc.tensor(&self.resolve_object(name)?);
        }
        Ok(acc)
    }

    /// Parse then evaluate.
    pub fn eval_str(&self, text: &str) -> Result<LinMap<S>> {
        evaluate(&parse_with_default(text, self.default_object.as_deref())?, self)
    }
}

/// Boundary `(src, tgt)` of a term, checking every internal composition.
pub fn infer_boundary<S: Scalar>(expr: &MorExpr, env: &Env<S>) -> Result<(Space, Space)> {
    infer_at(expr, env, "root")
}

fn infer_at<S: Scalar>(expr: &MorExpr, env: &Env<S>, path: &str) -> Result<(Space, Space)> {
    match expr {
        MorExpr::Gen(n) => env
            .generators
            .get(n)
            .map(|m| (m.src().clone(), m.tgt().clone()))
            .ok_or_else(|| Error::UnknownName(n.clone())),
        MorExpr::Id(w) => {
            let s = env.resolve_word(w)?;
            Ok((s.clone(), s))
        }
        MorExpr::Compose(parts) => {
            if parts.is_empty() {
                return Err(Error::BoundaryMismatch {
                    path: path.into(),
                    detail: "empty composition".into(),
                });
            }
            let n = parts.len();
            let (src, mut tgt) = infer_at(&parts[n - 1], env, &format!("{path}/{}", n - 1))?;
            for k in (0..n - 1).rev() {
                let (s, t) = infer_at(&parts[k], env, &format!("{path}/{k}"))?;
                if s != tgt {
                    return Err(Error::BoundaryMismatch {
                        path: format!("{path}/{k}"),
                        detail: format!("expects {s} but receives {tgt}"),
                    });
                }
                tgt = t;
            }
            Ok((src, tgt))
        }
        MorExpr::Tensor(parts) => {
            let mut src = Space::unit(env.chi.group());
            let mut tgt = src.clone();
            for (k, p) in parts.iter().enumerate() {
                let (s, t) = infer_at(p, env, &format!("{path}/{k}"))?;
                src = src.tensor(&s);
                tgt = tgt.tensor(&t);
            }
            Ok((src, tgt))
        }
        MorExpr::Braid(a, b) => {
            let (x, y) = (env.resolve_word(a)?, env.resolve_word(b)?);
            Ok((x.tensor(&y), y.tensor(&x)))
        }
        MorExpr::BraidInv(a, b) => {
            let (x, y) = (env.resolve_word(a)?, env.resolve_word(b)?);
            Ok((y.tensor(&x), x.tensor(&y)))
        }
        MorExpr::Eval(x) => {
            let s = env.resolve_object(x)?;
            let d = dual_space::<S>(&s).space;
            Ok((d.tensor(&s), Space::unit(env.chi.group())))
        }
        MorExpr::Coeval(x) => {
            let s = env.resolve_object(x)?;
            let d = dual_space::<S>(&s).space;
            Ok((Space::unit(env.chi.group()), s.tensor(&d)))
        }
    }
}

/// Evaluate a term by structural recursion.
pub fn evaluate<S: Scalar>(expr: &MorExpr, env: &Env<S>) -> Result<LinMap<S>> {
    infer_boundary(expr, env)?;
    eval_unchecked(expr, env)
}

fn eval_unchecked<S: Scalar>(expr: &MorExpr, env: &Env<S>) -> Result<LinMap<S>> {
    Ok(match expr {
        MorExpr::Gen(n) => env.generators[n].clone(),
        MorExpr::Id(w) => LinMap::identity(&env.resolve_word(w)?),
        MorExpr::Compose(parts) => {
            let mut acc = eval_unchecked(parts.last().expect("nonempty"), env)?;
            for p in parts.iter().rev().skip(1) {
                acc = compose(&eval_unchecked(p, env)?, &acc)?;
            }
            acc
        }
        MorExpr::Tensor(parts) => {
            let mut acc = LinMap::identity(&Space::unit(env.chi.group()));
            for p in parts {
                acc = tensor(&acc, &eval_unchecked(p, env)?);
            }
            acc
        }
        MorExpr::Braid(a, b) => braiding(&env.resolve_word(a)?, &env.resolve_word(b)?, &env.chi)?,
        MorExpr::BraidInv(a, b) => {
            braiding_inv(&env.resolve_word(a)?, &env.resolve_word(b)?, &env.chi)?
        }
        MorExpr::Eval(x) => dual_space::<S>(&env.resolve_object(x)?).eval,
        MorExpr::Coeval(x) => dual_space::<S>(&env.resolve_object(x)?).coeval,
    })
}

/// Evaluate both sides and compare. A boundary disagreement is an error,
/// distinct from inequality.
pub fn exprs_equal<S: Scalar>(lhs: &MorExpr, rhs: &MorExpr, env: &Env<S>) -> Result<bool> {
    Ok(compare(lhs, rhs, env)?.is_none())
}

/// Like [`exprs_equal`] but returns the first differing entry.
pub fn compare<S: Scalar>(
    lhs: &MorExpr,
    rhs: &MorExpr,
    env: &Env<S>,
) -> Result<Option<Difference<S>>> {
    let (ls, lt) = infer_boundary(lhs, env)?;
    let (rs, rt) = infer_boundary(rhs, env)?;
    if ls != rs || lt != rt {
        return Err(Error::BoundaryMismatch {
            path: "root".into(),
            detail: format!("lhs is {ls} -> {lt}, rhs is {rs} -> {rt}"),
        });
    }
    eval_unchecked(lhs, env)?.first_difference(&eval_unchecked(rhs, env)?)
}

// ---------------------------------------------------------------------------
// Parser

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    One,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Times,
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        match ch {
            c if c.is_whitespace() => i += 1,
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            '[' => {
                out.push(Tok::LBrack);
                i += 1
            }
            ']' => {
                out.push(Tok::RBrack);
                i += 1
            }
            ',' => {
                out.push(Tok::Comma);
                i += 1
            }
            '⊗' => {
                out.push(Tok::Times);
                i += 1
            }
            '1' if !chars.get(i + 1).is_some_and(|c| c.is_alphanumeric() || *c == '_') => {
                out.push(Tok::One);
                i += 1
            }
            c if c.is_alphanumeric() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '*')
                {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                out.push(if word == "x" { Tok::Times } else { Tok::Ident(word) });
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    default: Option<&'a str>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "expected {t:?} at token {}, found {:?}",
                self.pos,
                self.peek()
            )))
        }
    }

    fn default_word(&self) -> Result<ObjWord> {
        self.default
            .map(|d| vec![d.to_string()])
            .ok_or_else(|| Error::Parse("bare `1`/`c` needs a default object".into()))
    }

    fn expr(&mut self) -> Result<MorExpr> {
        let mut parts = vec![self.comp()?];
        while self.peek() == Some(&Tok::Times) {
            self.pos += 1;
            parts.push(self.comp()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            MorExpr::Tensor(parts)
        })
    }

    fn comp(&mut self) -> Result<MorExpr> {
        let mut parts = Vec::new();
        while matches!(self.peek(), Some(Tok::Ident(_) | Tok::One | Tok::LParen)) {
            parts.push(self.primary()?);
        }
        match parts.len() {
            0 => Err(Error::Parse(format!("expected a term at token {}", self.pos))),
            1 => Ok(parts.pop().expect("one part")),
            _ => Ok(MorExpr::Compose(parts)),
        }
    }

    fn bracket_words(&mut self) -> Result<Vec<ObjWord>> {
        self.expect(Tok::LBrack)?;
        let mut words = vec![Vec::new()];
        loop {
            match self.peek().cloned() {
                Some(Tok::Ident(n)) => {
                    words.last_mut().expect("nonempty").push(n);
                    self.pos += 1;
                }
                Some(Tok::Comma) => {
                    words.push(Vec::new());
                    self.pos += 1;
                }
                Some(Tok::RBrack) => {
                    self.pos += 1;
                    return Ok(words);
                }
                other => return Err(Error::Parse(format!("unexpected {other:?} in brackets"))),
            }
        }
    }

    fn primary(&mut self) -> Result<MorExpr> {
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::One) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::LBrack) {
                    let w = self.bracket_words()?;
                    if w.len() != 1 {
                        return Err(Error::Parse("identity takes one object word".into()));
                    }
                    Ok(MorExpr::Id(w.into_iter().next().expect("one word")))
                } else {
                    Ok(MorExpr::Id(self.default_word()?))
                }
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let has_args = self.peek() == Some(&Tok::LBrack);
                match name.as_str() {
                    "c" | "ci" => {
                        let (a, b) = if has_args {
                            let w = self.bracket_words()?;
                            if w.len() != 2 {
                                return Err(Error::Parse("braiding takes two objects".into()));
                            }
                            let mut it = w.into_iter();
                            (it.next().expect("a"), it.next().expect("b"))
                        } else {
                            (self.default_word()?, self.default_word()?)
                        };
                        Ok(if name == "c" {
                            MorExpr::Braid(a, b)
                        } else {
                            MorExpr::BraidInv(a, b)
                        })
                    }
                    "ev" | "coev" => {
                        let w = self.bracket_words()?;
                        if w.len() != 1 || w[0].len() != 1 {
                            return Err(Error::Parse(format!("{name} takes one object name")));
                        }
                        let x = w[0][0].clone();
                        Ok(if name == "ev" { MorExpr::Eval(x) } else { MorExpr::Coeval(x) })
                    }
                    _ => Ok(MorExpr::Gen(name)),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parse a term; bare `1`, `c`, `ci` refer to `default`.
pub fn parse_with_default(text: &str, default: Option<&str>) -> Result<MorExpr> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        default,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing input after token {} in `{text}`",
            p.pos
        )));
    }
    Ok(e)
}

/// Parse a term whose bare `1`, `c`, `ci` refer to the object `A`.
pub fn parse(text: &str) -> Result<MorExpr> {
    parse_with_default(text, Some("A"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::Group;
    use crate::scalar::Rat;

    fn q(n: i64) -> Rat {
        use crate::scalar::Scalar;
        Rat::from_int(&(), n)
    }

    fn env() -> Env<Rat> {
        let g = Group::trivial();
        let a = Space::plain(&g, &["u", "v"]);
        let aa = a.tensor(&a);
        // Pointwise product on functions on two points.
        let mu = LinMap::from_entries(&aa, &a, [(0, 0, q(1)), (1, 3, q(1))]).unwrap();
        Env::new(Bicharacter::trivial(g)).object("A", &a).generator("mu", &mu)
    }

    #[test]
    fn parse_shapes() {
        assert_eq!(parse("1").unwrap(), MorExpr::Id(vec!["A".into()]));
        assert_eq!(
            parse("mu (mu x 1)").unwrap(),
            MorExpr::Compose(vec![
                MorExpr::Gen("mu".into()),
                MorExpr::Tensor(vec![MorExpr::Gen("mu".into()), MorExpr::Id(vec!["A".into()])])
            ])
        );
        assert_eq!(
            parse("(1 x ci delta x 1)").unwrap(),
            MorExpr::Tensor(vec![
                MorExpr::Id(vec!["A".into()]),
                MorExpr::Compose(vec![
                    MorExpr::BraidInv(vec!["A".into()], vec!["A".into()]),
                    MorExpr::Gen("delta".into())
                ]),
                MorExpr::Id(vec!["A".into()]),
            ])
        );
        assert_eq!(
            parse("c[A, M N]").unwrap(),
            MorExpr::Braid(vec!["A".into()], vec!["M".into(), "N".into()])
        );
        assert!(parse("mu (").is_err());
    }

    #[test]
    fn boundaries() {
        let e = env();
        let (s, t) = infer_boundary(&parse("1").unwrap(), &e).unwrap();
        assert_eq!(s, t);
        let (s, t) = infer_boundary(&parse("mu (mu x 1)").unwrap(), &e).unwrap();
        assert_eq!(s.num_factors(), 3);
        assert_eq!(t.num_factors(), 1);
        assert!(matches!(
            infer_boundary(&parse("mu mu").unwrap(), &e),
            Err(Error::BoundaryMismatch { .. })
        ));
        assert!(matches!(
            infer_boundary(&parse("nu").unwrap(), &e),
            Err(Error::UnknownName(_))
        ));
    }

    #[test]
    fn associativity_and_identity() {
        let e = env();
        assert!(exprs_equal(&parse("mu (mu x 1)").unwrap(), &parse("mu (1 x mu)").unwrap(), &e).unwrap());
        assert!(exprs_equal(&parse("mu 1[A A]").unwrap(), &parse("mu").unwrap(), &e).unwrap());
        assert!(matches!(
            exprs_equal(&parse("mu").unwrap(), &parse("1").unwrap(), &e),
            Err(Error::BoundaryMismatch { .. })
        ));
    }

    #[test]
    fn triangle_diagram_is_identity() {
        let e = env();
        let lhs = parse("(1 x ev[A]) (coev[A] x 1)").unwrap();
        assert!(exprs_equal(&lhs, &parse("1").unwrap(), &e).unwrap());
        let lhs = parse("(ev[A] x 1[A*]) (1[A*] x coev[A])").unwrap();
        assert!(exprs_equal(&lhs, &parse("1[A*]").unwrap(), &e).unwrap());
    }
}
