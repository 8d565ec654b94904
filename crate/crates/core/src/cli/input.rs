use clap::ValueEnum;

use crate::error::{Error, Result};
use crate::graph::{edgelist, graph6, Graph};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// One graph6 string per line; blank lines and `#` comments are skipped.
    #[default]
    Graph6,
    /// A single graph as an `n m` header followed by `m` edge lines.
    EdgeList,
}

/// Parses `text` into graphs tagged with their 1-based line numbers. A bad
/// line yields an error for that line only.
pub fn read_graphs(text: &str, format: InputFormat) -> Vec<(usize, Result<Graph>)> {
    match format {
        InputFormat::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, line)| {
                let line = line.trim();
                !line.is_empty() && !line.starts_with('#')
            })
            .map(|(i, line)| (i + 1, graph6::decode(line.trim()).map_err(Error::from)))
            .collect(),
        InputFormat::EdgeList => {
            if text.lines().all(|l| l.trim().is_empty() || l.trim().starts_with('#')) {
                Vec::new()
            } else {
                vec![(1, edgelist::parse(text))]
            }
        }
    }
}
