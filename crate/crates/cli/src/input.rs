use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;

use ordercert::generators::gen;
use ordercert::io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use ordercert::{FamilySpec, Graph, VertexOrdering};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Graph6,
}

impl Format {
    pub fn parse(self, text: &str) -> Result<Graph> {
        Ok(match self {
            Format::Edgelist => parse_edge_list(text)?,
            Format::Graph6 => parse_graph6(text)?,
        })
    }

    pub fn emit(self, g: &Graph) -> String {
        match self {
            Format::Edgelist => emit_edge_list(g),
            Format::Graph6 => emit_graph6(g) + "\n",
        }
    }
}

/// An existing file is read in `format`; anything else must be a family spec
/// such as `cycle:5`.
pub fn load_graph(input: &str, format: Format) -> Result<Graph> {
    if Path::new(input).is_file() {
        let text = fs::read_to_string(input).with_context(|| format!("reading {input}"))?;
        return format.parse(&text).with_context(|| format!("parsing {input}"));
    }
    match input.parse::<FamilySpec>() {
        Ok(spec) => Ok(gen(&spec)?),
        Err(e) if input.contains(':') => Err(e.into()),
        Err(_) => bail!("cannot read {input}: no such file and not a family spec"),
    }
}

/// Vertex ids separated by whitespace or commas, given inline or in a file.
pub fn load_ordering(arg: &str, g: &Graph) -> Result<VertexOrdering> {
    let text = if Path::new(arg).is_file() {
        fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    } else {
        arg.to_string()
    };
    let ids = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().with_context(|| format!("bad vertex id {t:?}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(VertexOrdering::for_graph(g, ids)?)
}
