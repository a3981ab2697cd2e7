//! The group-spec mini-language:
//!
//! ```text
//! S<n>  A<n>  C<n>  D<order>  Q8  V4  GL(n,p)  SL(n,p)
//! perm:(1,2,3);(1,2)         raw generators, one cycle string per generator
//! sdp(N,H,action)            action: inversion | trivial | cycle | pow<k>
//! <spec>x<spec>x...          direct products
//! ```

use super::finite::FiniteGroup;
use super::perm::Perm;
use super::sdp::{semidirect_product, BuiltinAction, SemidirectProduct};
use crate::error::{Error, Result};

/// Largest `|GL(n,p)|` (or `|SL(n,p)|`) the constructor accepts.
pub const LINEAR_ORDER_LIMIT: u64 = 10_000;

fn spec_err(spec: &str, reason: impl Into<String>) -> Error {
    Error::GroupSpec {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

/// Splits at `sep` outside parentheses.
fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn parse_param(spec: &str, text: &str) -> Result<u64> {
    text.trim()
        .parse::<u64>()
        .map_err(|_| spec_err(spec, format!("`{text}` is not a nonnegative integer")))
}

fn cycle_perm(degree: usize, points: impl IntoIterator<Item = u32>) -> Perm {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let pts: Vec<u32> = points.into_iter().collect();
    for (k, &p) in pts.iter().enumerate() {
        images[p as usize] = pts[(k + 1) % pts.len()];
    }
    Perm::from_images_unchecked(images)
}

pub fn symmetric(n: usize) -> FiniteGroup {
    let degree = n.max(1);
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle_perm(degree, [0, 1]));
    }
    if n >= 3 {
        gens.push(cycle_perm(degree, 0..n as u32));
    }
    FiniteGroup::new(degree, gens).expect("valid generators")
}

pub fn alternating(n: usize) -> FiniteGroup {
    let degree = n.max(1);
    let gens = (2..n as u32).map(|k| cycle_perm(degree, [0, 1, k])).collect();
    FiniteGroup::new(degree, gens).expect("valid generators")
}

pub fn cyclic(n: usize) -> FiniteGroup {
    let degree = n.max(1);
    let gens = if n >= 2 { vec![cycle_perm(degree, 0..n as u32)] } else { Vec::new() };
    FiniteGroup::new(degree, gens).expect("valid generators")
}

/// Dihedral group of the given order (even, at least 4). Order 4 is the
/// Klein four-group on 4 points.
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    let spec = format!("D{order}");
    if order < 4 || order % 2 != 0 {
        return Err(spec_err(&spec, "dihedral order must be even and at least 4"));
    }
    let m = order / 2;
    if m == 2 {
        return FiniteGroup::new(4, vec![cycle_perm(4, [0, 1]), cycle_perm(4, [2, 3])]);
    }
    let rotation = cycle_perm(m, 0..m as u32);
    let reflection = Perm::from_images((0..m as u32).map(|i| (m as u32 - i) % m as u32).collect())?;
    FiniteGroup::new(m, vec![rotation, reflection])
}

/// Quaternion group in its regular representation on 8 points.
pub fn quaternion() -> FiniteGroup {
    // Element (s, u): sign s ∈ {0,1} and unit u ∈ {1,i,j,k} as 0..4.
    fn unit_mul(a: usize, b: usize) -> (usize, usize) {
        // (sign, unit) of e_a e_b
        const TABLE: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        TABLE[a][b]
    }
    let index = |s: usize, u: usize| (s * 4 + u) as u32;
    let right_mul = |u: usize| {
        let images: Vec<u32> = (0..8)
            .map(|x| {
                let (s, a) = (x / 4, x % 4);
                let (t, c) = unit_mul(a, u);
                index((s + t) % 2, c)
            })
            .collect();
        Perm::from_images_unchecked(images)
    };
    FiniteGroup::new(8, vec![right_mul(1), right_mul(2)]).expect("valid generators")
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    (2..p)
        .find(|&w| {
            let mut x = 1;
            (1..p - 1).all(|_| {
                x = x * w % p;
                x != 1
            })
        })
        .expect("a prime has a primitive root")
}

fn general_linear_order(n: u32, p: u64) -> Option<u64> {
    let q = p.checked_pow(n)?;
    (0..n).try_fold(1u64, |acc, i| acc.checked_mul(q - p.checked_pow(i)?))
}

/// `GL(n,p)` (or `SL(n,p)` when `special`) acting on the nonzero row vectors
/// of `F_p^n`.
pub fn linear(n: usize, p: u64, special: bool) -> Result<FiniteGroup> {
    let spec = format!("{}({n},{p})", if special { "SL" } else { "GL" });
    if n == 0 {
        return Err(spec_err(&spec, "dimension must be at least 1"));
    }
    if !is_prime(p) {
        return Err(spec_err(&spec, format!("{p} is not prime")));
    }
    let gl = general_linear_order(n as u32, p);
    let order = gl.map(|o| if special { o / (p - 1) } else { o });
    let order = match order {
        Some(o) if o <= LINEAR_ORDER_LIMIT => o,
        _ => {
            return Err(Error::OutOfRange {
                what: spec.clone(),
                detail: format!("group order exceeds {LINEAR_ORDER_LIMIT}"),
            })
        }
    };

    let q = p.pow(n as u32) as usize;
    let vector = |mut code: usize| -> Vec<u64> {
        (0..n)
            .map(|_| {
                let d = (code % p as usize) as u64;
                code /= p as usize;
                d
            })
            .collect()
    };
    let encode = |v: &[u64]| -> usize { v.iter().rev().fold(0usize, |acc, &d| acc * p as usize + d as usize) };
    // Points are the nonzero vectors, code - 1.
    let act = |m: &[Vec<u64>]| -> Perm {
        let images: Vec<u32> = (1..q)
            .map(|code| {
                let v = vector(code);
                let w: Vec<u64> = (0..n)
                    .map(|j| (0..n).map(|i| v[i] * m[i][j]).sum::<u64>() % p)
                    .collect();
                (encode(&w) - 1) as u32
            })
            .collect();
        Perm::from_images_unchecked(images)
    };
    let identity = || -> Vec<Vec<u64>> { (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect() };

    let mut mats = Vec::new();
    if !special && p > 2 {
        let mut d = identity();
        d[0][0] = primitive_root(p);
        mats.push(d);
    }
    for i in 0..n.saturating_sub(1) {
        let mut up = identity();
        up[i][i + 1] = 1;
        mats.push(up);
        let mut down = identity();
        down[i + 1][i] = 1;
        mats.push(down);
    }
    let gens: Vec<Perm> = mats.iter().map(|m| act(m)).collect();
    let group = FiniteGroup::new(q - 1, gens)?;
    if group.order() != order {
        return Err(Error::Internal(format!(
            "{spec} generated a group of order {}, expected {order}",
            group.order()
        )));
    }
    Ok(group)
}

fn parse_perm_generators(spec: &str, body: &str) -> Result<FiniteGroup> {
    let cycles: Vec<&str> = body.split(';').map(str::trim).filter(|s| !s.is_empty()).collect();
    let mut degree = 1usize;
    for c in &cycles {
        for tok in c.split(|ch: char| !ch.is_ascii_digit()).filter(|t| !t.is_empty()) {
            let v: usize = tok.parse().map_err(|_| spec_err(spec, format!("bad point `{tok}`")))?;
            degree = degree.max(v);
        }
    }
    let gens = cycles
        .iter()
        .map(|c| Perm::from_cycles(degree, c))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| spec_err(spec, e.to_string()))?;
    FiniteGroup::new(degree, gens)
}

fn parse_sdp(spec: &str, body: &str) -> Result<SemidirectProduct> {
    let args = split_top_level(body, ',');
    if args.len() != 3 {
        return Err(spec_err(spec, "sdp needs three arguments: sdp(N,H,action)"));
    }
    let n = make_named_group(args[0])?;
    let h = make_named_group(args[1])?;
    let action: BuiltinAction = args[2].parse()?;
    semidirect_product(&action.table(&n, &h)?)
}

fn parse_linear(spec: &str, body: &str, special: bool) -> Result<FiniteGroup> {
    let args: Vec<&str> = body.split(',').collect();
    if args.len() != 2 {
        return Err(spec_err(spec, "expected two parameters (n,p)"));
    }
    let n = parse_param(spec, args[0])? as usize;
    let p = parse_param(spec, args[1])?;
    linear(n, p, special)
}

fn parse_single(spec: &str) -> Result<FiniteGroup> {
    let s = spec.trim();
    if s.is_empty() {
        return Err(spec_err(spec, "empty group spec"));
    }
    if let Some(body) = s.strip_prefix("perm:") {
        return parse_perm_generators(spec, body);
    }
    if let Some(inner) = s.strip_suffix(')') {
        if let Some(body) = inner.strip_prefix("sdp(") {
            return Ok(parse_sdp(spec, body)?.group);
        }
        if let Some(body) = inner.strip_prefix("GL(") {
            return parse_linear(spec, body, false);
        }
        if let Some(body) = inner.strip_prefix("SL(") {
            return parse_linear(spec, body, true);
        }
        if inner.starts_with('(') {
            return make_named_group(&inner[1..]);
        }
    }
    match s {
        "Q8" => return Ok(quaternion()),
        "V4" => return dihedral(4),
        _ => {}
    }
    let (Some(head), Some(tail)) = (s.get(..1), s.get(1..)) else {
        return Err(Error::UnknownGroup(spec.to_string()));
    };
    let n = parse_param(spec, tail).map_err(|_| Error::UnknownGroup(spec.to_string()))? as usize;
    const DEGREE_LIMIT: usize = 64;
    if n > DEGREE_LIMIT && head != "D" || n > 2 * DEGREE_LIMIT {
        return Err(Error::OutOfRange {
            what: spec.to_string(),
            detail: format!("parameter {n} is too large"),
        });
    }
    match head {
        "S" => Ok(symmetric(n)),
        "A" => Ok(alternating(n)),
        "C" if n >= 1 => Ok(cyclic(n)),
        "D" => dihedral(n),
        _ => Err(Error::UnknownGroup(spec.to_string())),
    }
}

/// Builds the group named by `spec`.
pub fn make_named_group(spec: &str) -> Result<FiniteGroup> {
    let factors = split_top_level(spec.trim(), 'x');
    if factors.len() == 1 {
        return parse_single(factors[0]);
    }
    let groups = factors.iter().map(|f| parse_single(f)).collect::<Result<Vec<_>>>()?;
    FiniteGroup::direct_product(&groups)
}

/// Parses `sdp(N,H,action)` keeping the factors and embeddings.
pub fn make_semidirect(spec: &str) -> Result<SemidirectProduct> {
    let s = spec.trim();
    let body = s
        .strip_prefix("sdp(")
        .and_then(|b| b.strip_suffix(')'))
        .ok_or_else(|| spec_err(spec, "expected sdp(N,H,action)"))?;
    parse_sdp(spec, body)
}
