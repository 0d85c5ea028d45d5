//! The semigroup dump format.
//!
//! ```text
//! bsg <n>
//! zero <i>
//! star <i> <j>
//! mul <i> <j> <k>
//! pc <e> <a>        # closed projection e, back-mapped lattice element a
//! ```

use super::{SemigroupError, SemigroupOps, StarSemigroup};
use crate::lattice::FormatError;

/// A semigroup table plus the optional closed-projection section.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupDump {
    pub semigroup: StarSemigroup,
    /// `(closed projection id, lattice element id)` pairs.
    pub pc: Vec<(usize, usize)>,
}

pub fn write_semigroup_dump(g: &StarSemigroup, pc: &[(usize, usize)]) -> String {
    use std::fmt::Write;
    let n = g.n();
    let mut out = String::new();
    let _ = writeln!(out, "bsg {n}");
    let _ = writeln!(out, "zero {}", g.zero());
    for (i, &s) in g.star_table().iter().enumerate() {
        let _ = writeln!(out, "star {i} {s}");
    }
    for i in 0..n {
        for j in 0..n {
            let _ = writeln!(out, "mul {i} {j} {}", g.cayley()[i * n + j]);
        }
    }
    for &(e, a) in pc {
        let _ = writeln!(out, "pc {e} {a}");
    }
    out
}

pub fn parse_semigroup_dump(text: &str) -> Result<SemigroupDump, FormatError> {
    let mut n: Option<usize> = None;
    let mut zero = None;
    let mut star: Vec<Option<usize>> = Vec::new();
    let mut cayley: Vec<Option<usize>> = Vec::new();
    let mut pc = Vec::new();

    let fail = |line: usize, msg: String| FormatError { line, msg };
    for (idx, raw_line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw_line.find('#') {
            Some(p) => &raw_line[..p],
            None => raw_line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        let ids: Result<Vec<usize>, FormatError> = words[1..]
            .iter()
            .map(|w| {
                w.parse::<usize>()
                    .map_err(|_| fail(lineno, format!("expected a number, got `{w}`")))
            })
            .collect();
        let ids = ids?;
        let in_range = |id: usize| -> Result<usize, FormatError> {
            match n {
                Some(n) if id < n => Ok(id),
                Some(n) => Err(fail(lineno, format!("id {id} out of range 0..{n}"))),
                None => Err(fail(lineno, "directive before the `bsg <n>` header".into())),
            }
        };
        match (words[0], ids.as_slice()) {
            ("bsg", &[count]) => {
                if n.is_some() {
                    return Err(fail(lineno, "duplicate `bsg` header".into()));
                }
                n = Some(count);
                star = vec![None; count];
                cayley = vec![None; count * count];
            }
            ("zero", &[i]) => zero = Some(in_range(i)?),
            ("star", &[i, j]) => {
                let (i, j) = (in_range(i)?, in_range(j)?);
                star[i] = Some(j);
            }
            ("mul", &[i, j, k]) => {
                let (i, j, k) = (in_range(i)?, in_range(j)?, in_range(k)?);
                cayley[i * n.unwrap() + j] = Some(k);
            }
            ("pc", &[e, a]) => {
                pc.push((in_range(e)?, a));
            }
            (dir, _) => return Err(fail(lineno, format!("unintelligible `{dir}` directive"))),
        }
    }
    let total = text.lines().count();
    n.ok_or_else(|| fail(total, "missing `bsg <n>` header".into()))?;
    let zero = zero.ok_or_else(|| fail(total, "missing `zero`".into()))?;
    let star: Option<Vec<usize>> = star.into_iter().collect();
    let star = star.ok_or_else(|| fail(total, "star table is partial".into()))?;
    let cayley: Option<Vec<usize>> = cayley.into_iter().collect();
    let cayley = cayley.ok_or_else(|| fail(total, "mul table is partial".into()))?;
    let semigroup = StarSemigroup::validate(cayley, star, zero)
        .map_err(|e: SemigroupError| fail(total, e.to_string()))?;
    Ok(SemigroupDump { semigroup, pc })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foulis::foulis_semigroup;
    use crate::lattice::parse_model_name;

    #[test]
    fn dump_round_trips_for_the_b4_semigroup() {
        let l = parse_model_name("b4").unwrap();
        let g = foulis_semigroup(&l, 8).unwrap();
        let table = g.to_star_semigroup(64).unwrap();
        let pc: Vec<(usize, usize)> = l.elements().map(|a| (g.mu(a), a)).collect();
        let text = write_semigroup_dump(&table, &pc);
        let parsed = parse_semigroup_dump(&text).unwrap();
        assert_eq!(parsed.semigroup, table);
        assert_eq!(parsed.pc, pc);
    }

    #[test]
    fn partial_tables_are_rejected() {
        let text = "bsg 2\nzero 0\nstar 0 0\nstar 1 1\nmul 0 0 0\n";
        let e = parse_semigroup_dump(text).unwrap_err();
        assert!(e.msg.contains("partial"));
    }

    #[test]
    fn invalid_tables_are_rejected_at_load() {
        // Complete but violating the zero law.
        let text = "bsg 2\nzero 0\nstar 0 0\nstar 1 1\nmul 0 0 0\nmul 0 1 1\nmul 1 0 0\nmul 1 1 1\n";
        let e = parse_semigroup_dump(text).unwrap_err();
        assert!(e.msg.contains("zero law"), "{e}");
    }
}
