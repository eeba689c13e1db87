//! Bundled descriptions of the worked examples and the three code tables.

use clap::ValueEnum;
use serde::Serialize;

use crate::spec::{parse_codes, CodeFile};

const EXAMPLES: &str = include_str!("../corpus/examples.json");
const TABLE1: &str = include_str!("../corpus/table1.json");
const TABLE2: &str = include_str!("../corpus/table2.json");
const TABLE3: &str = include_str!("../corpus/table3.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Table {
    Examples,
    #[value(name = "1")]
    Table1,
    #[value(name = "2")]
    Table2,
    #[value(name = "3")]
    Table3,
    All,
}

impl Table {
    fn sources(self) -> &'static [&'static str] {
        match self {
            Table::Examples => &[EXAMPLES],
            Table::Table1 => &[TABLE1],
            Table::Table2 => &[TABLE2],
            Table::Table3 => &[TABLE3],
            Table::All => &[EXAMPLES, TABLE1, TABLE2, TABLE3],
        }
    }
}

/// Entries of `table` in file order.
pub fn load(table: Table) -> Vec<CodeFile> {
    table
        .sources()
        .iter()
        .flat_map(|src| parse_codes(src).expect("bundled corpus parses"))
        .collect()
}

pub fn find(name: &str) -> Option<CodeFile> {
    load(Table::All).into_iter().find(|c| c.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_unique_names() {
        assert_eq!(load(Table::Examples).len(), 4);
        assert_eq!(load(Table::Table1).len(), 13);
        assert_eq!(load(Table::Table2).len(), 9);
        assert_eq!(load(Table::Table3).len(), 45);
        let all = load(Table::All);
        let mut names: Vec<_> = all.iter().map(|c| c.name.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), all.len());
    }

    #[test]
    fn every_entry_builds() {
        for c in load(Table::All) {
            c.build().unwrap_or_else(|e| panic!("{}: {e}", c.name));
        }
    }
}
