use liealg::Weight;
use parabolic::ParabolicSpec;

/// Parses `a1,...,ak|b1,...,bn`, optionally wrapped in brackets. Entries are
/// integers or halves `p/2` with `p` odd. The bar sits after the crossed index;
/// it is omitted when the last node is crossed.
pub fn parse_weight(text: &str, spec: &ParabolicSpec) -> Result<Weight, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let s = match (s.strip_prefix('['), s.ends_with(']')) {
        (Some(inner), true) => &inner[..inner.len() - 1],
        (None, false) => s.as_str(),
        _ => return Err(format!("unbalanced brackets in {text:?}")),
    };
    let rank = spec.rank();
    let (left, right) = match s.split_once('|') {
        Some((l, r)) => (l, Some(r)),
        None => (s, None),
    };
    let mut twice = Vec::with_capacity(rank);
    for part in [Some(left), right].into_iter().flatten() {
        if part.is_empty() {
            continue;
        }
        for entry in part.split(',') {
            twice.push(parse_entry(entry)?);
        }
    }
    if twice.len() != rank {
        return Err(format!("expected {rank} entries, got {} in {text:?}", twice.len()));
    }
    let left_len = if left.is_empty() { 0 } else { left.split(',').count() };
    match right {
        Some(_) if left_len != spec.k => {
            return Err(format!("bar after entry {left_len}, crossed node is {}", spec.k));
        }
        None if spec.k != rank => return Err(format!("missing bar after entry {}", spec.k)),
        _ => {}
    }
    Ok(Weight::from_twice(twice))
}

fn parse_entry(entry: &str) -> Result<i64, String> {
    let bad = || format!("bad entry {entry:?}");
    match entry.split_once('/') {
        None => entry.parse::<i64>().map(|v| 2 * v).map_err(|_| bad()),
        Some((p, q)) => {
            let p: i64 = p.parse().map_err(|_| bad())?;
            if q != "2" {
                return Err(format!("{entry:?} is not a half-integer"));
            }
            if p % 2 == 0 {
                return Err(format!("{entry:?} is not in lowest terms"));
            }
            Ok(p)
        }
    }
}
