//! The chain witness table.

use std::fmt::Write;

use algframe_core::chains::{ChainPredicate, Fixture, SEPARATING_CHAINS};

use crate::Result;

#[derive(Debug, Clone)]
pub struct Cell {
    pub predicate: ChainPredicate,
    pub closed_form: bool,
    pub oracle: bool,
    pub expected: bool,
}

impl Cell {
    pub fn agrees(&self) -> bool {
        self.closed_form == self.oracle && self.oracle == self.expected
    }
}

#[derive(Debug, Clone)]
pub struct Row {
    pub fixture: Fixture,
    pub cells: Vec<Cell>,
}

pub fn table() -> Result<Vec<Row>> {
    SEPARATING_CHAINS
        .iter()
        .map(|&fixture| {
            let c = fixture.frame();
            let cells = ChainPredicate::ALL
                .iter()
                .map(|&p| {
                    Ok(Cell {
                        predicate: p,
                        closed_form: c.predicate(p),
                        oracle: c.predicate_oracle(p)?,
                        expected: fixture.expected(p),
                    })
                })
                .collect::<Result<_>>()?;
            Ok(Row { fixture, cells })
        })
        .collect()
}

/// One line per fixture and predicate column; a cell reads `T` or `F`,
/// and `!` marks disagreement between closed form, oracle and table.
pub fn render(rows: &[Row]) -> String {
    let width = rows.iter().map(|r| r.fixture.name.len()).max().unwrap_or(0);
    let mut out = format!("{:width$}  {:11}", "chain", "word");
    for p in ChainPredicate::ALL {
        write!(out, " {}", p.name()).unwrap();
    }
    out.push('\n');
    for r in rows {
        write!(out, "{:width$}  {:11}", r.fixture.name, r.fixture.word).unwrap();
        for c in &r.cells {
            let mark = match (c.closed_form, c.agrees()) {
                (true, true) => "T",
                (false, true) => "F",
                _ => "!",
            };
            write!(out, " {:>w$}", mark, w = c.predicate.name().len()).unwrap();
        }
        out.push('\n');
    }
    out
}
