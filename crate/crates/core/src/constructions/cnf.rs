use crate::error::{Error, Result};

/// A formula in conjunctive normal form over variables `1..=num_vars`.
/// Literal `v` is the variable itself, `-v` its negation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for (j, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::InvalidFormula(format!("clause {j} is empty")));
            }
            if let Some(&lit) = clause
                .iter()
                .find(|&&l| l == 0 || l.unsigned_abs() as usize > num_vars)
            {
                return Err(Error::InvalidFormula(format!(
                    "literal {lit} in clause {j} is outside 1..={num_vars}"
                )));
            }
        }
        Ok(Self { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// The same formula with one unused variable added if the count is odd.
    pub fn padded_to_even(&self) -> Self {
        Self {
            num_vars: self.num_vars + self.num_vars % 2,
            clauses: self.clauses.clone(),
        }
    }

    /// Truth value of a literal when variable `v` is set to bit `v - 1` of
    /// `assignment`.
    pub fn literal_value(lit: i32, assignment: u64) -> bool {
        let bit = assignment >> (lit.unsigned_abs() - 1) & 1 == 1;
        bit == (lit > 0)
    }

    pub fn evaluate(&self, assignment: u64) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&l| Self::literal_value(l, assignment)))
    }

    /// Tries all `2^num_vars` assignments.
    pub fn is_satisfiable_brute(&self) -> bool {
        assert!(self.num_vars < 64, "brute force limited to 63 variables");
        (0..1u64 << self.num_vars).any(|a| self.evaluate(a))
    }

    /// Reads DIMACS CNF: `c` comment lines, a `p cnf V C` header, then
    /// clauses as literal lists each terminated by `0` (possibly spanning
    /// lines).
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('c') || trimmed.starts_with('%') {
                continue;
            }
            if trimmed.starts_with('p') {
                let fields: Vec<&str> = trimmed.split_whitespace().collect();
                match fields.as_slice() {
                    ["p", "cnf", v, c] => {
                        let v = v.parse().map_err(|_| parse_err(format!("bad variable count `{v}`")))?;
                        let c = c.parse().map_err(|_| parse_err(format!("bad clause count `{c}`")))?;
                        header = Some((v, c));
                    }
                    _ => return Err(parse_err(format!("malformed header `{trimmed}`"))),
                }
                continue;
            }
            if header.is_none() {
                return Err(parse_err("clause before `p cnf` header".into()));
            }
            for tok in trimmed.split_whitespace() {
                let lit: i32 = tok
                    .parse()
                    .map_err(|_| parse_err(format!("bad literal `{tok}`")))?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else {
                    current.push(lit);
                }
            }
        }
        let (num_vars, num_clauses) = header.ok_or(Error::Parse {
            line: 0,
            message: "missing `p cnf` header".into(),
        })?;
        if !current.is_empty() {
            clauses.push(current);
        }
        if clauses.len() != num_clauses {
            return Err(Error::Parse {
                line: 0,
                message: format!("header declares {num_clauses} clauses, found {}", clauses.len()),
            });
        }
        Self::new(num_vars, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                out.push_str(&format!("{l} "));
            }
            out.push_str("0\n");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(CnfFormula::new(2, vec![vec![]]).is_err());
        assert!(CnfFormula::new(2, vec![vec![3]]).is_err());
        assert!(CnfFormula::new(2, vec![vec![1, -2]]).is_ok());
    }

    #[test]
    fn brute_force() {
        let f = CnfFormula::new(2, vec![vec![1, 2]]).unwrap();
        assert!(f.is_satisfiable_brute());
        let f = CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap();
        assert!(!f.is_satisfiable_brute());
        // x1 xor x2 as CNF plus x1 = x2
        let f = CnfFormula::new(2, vec![vec![1, 2], vec![-1, -2], vec![1, -2], vec![-1, 2]]).unwrap();
        assert!(!f.is_satisfiable_brute());
    }

    #[test]
    fn dimacs_round_trip() {
        let text = "c example\np cnf 3 2\n1 -3 0\n2\n3 0\n";
        let f = CnfFormula::parse_dimacs(text).unwrap();
        assert_eq!(f.clauses(), &[vec![1, -3], vec![2, 3]]);
        assert_eq!(CnfFormula::parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }

    #[test]
    fn dimacs_errors() {
        assert!(CnfFormula::parse_dimacs("1 2 0\n").is_err());
        assert!(CnfFormula::parse_dimacs("p cnf 2 2\n1 2 0\n").is_err());
        assert!(CnfFormula::parse_dimacs("p cnf 2 1\n1 x 0\n").is_err());
        assert!(CnfFormula::parse_dimacs("p cnf 2 2\n1 0 0\n").is_err());
    }

    #[test]
    fn padding() {
        let f = CnfFormula::new(3, vec![vec![1]]).unwrap();
        assert_eq!(f.padded_to_even().num_vars(), 4);
        assert_eq!(f.padded_to_even().padded_to_even().num_vars(), 4);
    }
}
