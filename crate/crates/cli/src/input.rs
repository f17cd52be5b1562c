//! System-file ingestion: JSON documents with exact decimal entries and
//! optional named parameters appearing in linear entry expressions.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;

use delaystab::polycore::{parse_rat, Rat, RatMatrix};
use delaystab::stability::NeutralSystem;

/// Parsed system file prior to parameter binding.
#[derive(Debug, Clone, Deserialize)]
pub struct SystemFile {
    #[serde(default)]
    pub label: Option<String>,
    pub n: usize,
    #[serde(rename = "N")]
    pub delays: usize,
    #[serde(rename = "A0")]
    pub a0: Vec<Vec<serde_json::Value>>,
    #[serde(rename = "A", default)]
    pub a: Vec<Vec<Vec<serde_json::Value>>>,
    #[serde(rename = "B", default)]
    pub b: Vec<Vec<Vec<serde_json::Value>>>,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
}

impl SystemFile {
    pub fn load(path: &std::path::Path) -> Result<SystemFile> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        let file: SystemFile = serde_json::from_str(&text)
            .with_context(|| format!("cannot parse {}", path.display()))?;
        if file.n == 0 {
            bail!("state dimension n must be at least 1");
        }
        if file.delays == 0 {
            bail!("delay multiplicity N must be at least 1");
        }
        if file.a.len() > file.delays || file.b.len() > file.delays {
            bail!("more A/B matrices than the declared delay multiplicity N");
        }
        Ok(file)
    }

    /// Default parameter values declared in the file.
    pub fn default_params(&self) -> Result<BTreeMap<String, Rat>> {
        self.params
            .iter()
            .map(|(k, v)| {
                Ok((
                    k.clone(),
                    parse_rat(v).map_err(|e| anyhow!("parameter {k}: {e}"))?,
                ))
            })
            .collect()
    }

    /// Instantiate the system, binding parameters (file defaults overlaid by
    /// `overrides`). Missing trailing A/B matrices default to zero.
    pub fn instantiate(&self, overrides: &BTreeMap<String, Rat>) -> Result<NeutralSystem> {
        let mut params = self.default_params()?;
        for (k, v) in overrides {
            if !params.contains_key(k) {
                bail!("unknown parameter '{k}' (declared: {:?})", params.keys().collect::<Vec<_>>());
            }
            params.insert(k.clone(), v.clone());
        }
        let a0 = self.matrix(&self.a0, &params).context("matrix A0")?;
        let mut a = Vec::with_capacity(self.delays);
        let mut b = Vec::with_capacity(self.delays);
        for k in 0..self.delays {
            a.push(match self.a.get(k) {
                Some(m) => self.matrix(m, &params).with_context(|| format!("matrix A[{}]", k + 1))?,
                None => RatMatrix::zeros(self.n, self.n),
            });
            b.push(match self.b.get(k) {
                Some(m) => self.matrix(m, &params).with_context(|| format!("matrix B[{}]", k + 1))?,
                None => RatMatrix::zeros(self.n, self.n),
            });
        }
        Ok(NeutralSystem::new(a0, a, b)?)
    }

    fn matrix(
        &self,
        rows: &[Vec<serde_json::Value>],
        params: &BTreeMap<String, Rat>,
    ) -> Result<RatMatrix> {
        if rows.len() != self.n || rows.iter().any(|r| r.len() != self.n) {
            bail!("expected a {0}x{0} matrix", self.n);
        }
        let parsed: Result<Vec<Vec<Rat>>> = rows
            .iter()
            .map(|r| r.iter().map(|v| entry_value(v, params)).collect())
            .collect();
        Ok(RatMatrix::from_rows(parsed?)?)
    }
}

/// One matrix entry: a JSON number (taken at its literal decimal value) or a
/// string holding a decimal, a fraction, or a linear expression in the
/// declared parameters such as `"-a"` or `"0.5*alpha + 1"`.
pub fn entry_value(v: &serde_json::Value, params: &BTreeMap<String, Rat>) -> Result<Rat> {
    match v {
        serde_json::Value::Number(n) => {
            parse_rat(&n.to_string()).map_err(|e| anyhow!("bad numeric entry {n}: {e}"))
        }
        serde_json::Value::String(s) => eval_expr(s, params),
        other => bail!("matrix entries must be numbers or strings, got {other}"),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rat),
    Ident(String),
    Plus,
    Minus,
    Star,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '0'..='9' | '.' => {
                let start = i;
                while i < bytes.len() && matches!(bytes[i] as char, '0'..='9' | '.') {
                    i += 1;
                }
                // optional exponent
                if i < bytes.len() && matches!(bytes[i] as char, 'e' | 'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && matches!(bytes[j] as char, '+' | '-') {
                        j += 1;
                    }
                    if j < bytes.len() && (bytes[j] as char).is_ascii_digit() {
                        i = j;
                        while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let lit = &s[start..i];
                out.push(Tok::Num(parse_rat(lit).map_err(|e| anyhow!("in '{s}': {e}"))?));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && matches!(bytes[i] as char, 'a'..='z' | 'A'..='Z' | '0'..='9' | '_')
                {
                    i += 1;
                }
                out.push(Tok::Ident(s[start..i].to_string()));
            }
            _ => bail!("unexpected character '{c}' in expression '{s}'"),
        }
    }
    Ok(out)
}

/// expr := ['+'|'-'] term (('+'|'-') term)* ; term := factor ('*' factor)*
pub fn eval_expr(s: &str, params: &BTreeMap<String, Rat>) -> Result<Rat> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        bail!("empty expression");
    }
    let mut pos = 0usize;
    let value = parse_sum(&toks, &mut pos, params, s)?;
    if pos != toks.len() {
        bail!("trailing tokens in expression '{s}'");
    }
    Ok(value)
}

fn parse_sum(
    toks: &[Tok],
    pos: &mut usize,
    params: &BTreeMap<String, Rat>,
    src: &str,
) -> Result<Rat> {
    let mut negate = false;
    if matches!(toks.get(*pos), Some(Tok::Plus | Tok::Minus)) {
        negate = matches!(toks[*pos], Tok::Minus);
        *pos += 1;
    }
    let mut acc = parse_term(toks, pos, params, src)?;
    if negate {
        acc = -acc;
    }
    while let Some(t) = toks.get(*pos) {
        let neg = match t {
            Tok::Plus => false,
            Tok::Minus => true,
            _ => bail!("expected + or - in expression '{src}'"),
        };
        *pos += 1;
        let term = parse_term(toks, pos, params, src)?;
        acc = if neg { acc - term } else { acc + term };
    }
    Ok(acc)
}

fn parse_term(
    toks: &[Tok],
    pos: &mut usize,
    params: &BTreeMap<String, Rat>,
    src: &str,
) -> Result<Rat> {
    let mut acc = parse_factor(toks, pos, params, src)?;
    while matches!(toks.get(*pos), Some(Tok::Star)) {
        *pos += 1;
        acc *= parse_factor(toks, pos, params, src)?;
    }
    Ok(acc)
}

fn parse_factor(
    toks: &[Tok],
    pos: &mut usize,
    params: &BTreeMap<String, Rat>,
    src: &str,
) -> Result<Rat> {
    match toks.get(*pos) {
        Some(Tok::Num(r)) => {
            *pos += 1;
            Ok(r.clone())
        }
        Some(Tok::Ident(name)) => {
            *pos += 1;
            params
                .get(name)
                .cloned()
                .ok_or_else(|| anyhow!("unknown parameter '{name}' in expression '{src}'"))
        }
        _ => bail!("expected a number or parameter in expression '{src}'"),
    }
}
