//! Replayable construction traces for witness graphs.
//!
//! A recipe is a stack program: family constructors push graphs,
//! `join` / `disjoint_union` combine the top two (second operand on
//! top), and the remaining steps edit the top of the stack in place.
//! Replaying a recipe is deterministic, so a printed trace is a full
//! certificate for the graph it came from. Stored vertex labels are
//! one-based, matching everything the command line prints.

use crate::constructions as cons;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// One instruction. Vertex labels are one-based.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RecipeStep {
    Path {
        m: usize,
    },
    Cycle {
        m: usize,
    },
    Complete {
        m: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    /// Pop h then g, push their disjoint union (h shifted past g).
    DisjointUnion,
    /// Pop h then g, push their join (h shifted past g).
    Join,
    /// Append `times` copies of vertex v to the top graph.
    DuplicateVertex {
        v: usize,
        times: usize,
    },
    AddEdge {
        u: usize,
        v: usize,
    },
    RemoveEdge {
        u: usize,
        v: usize,
    },
}

impl std::fmt::Display for RecipeStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            RecipeStep::Path { m } => write!(f, "path({m})"),
            RecipeStep::Cycle { m } => write!(f, "cycle({m})"),
            RecipeStep::Complete { m } => write!(f, "complete({m})"),
            RecipeStep::CompleteBipartite { a, b } => write!(f, "complete_bipartite({a},{b})"),
            RecipeStep::DisjointUnion => write!(f, "disjoint_union"),
            RecipeStep::Join => write!(f, "join"),
            RecipeStep::DuplicateVertex { v, times } => {
                write!(f, "duplicate_vertex({v}, times={times})")
            }
            RecipeStep::AddEdge { u, v } => write!(f, "add_edge({u},{v})"),
            RecipeStep::RemoveEdge { u, v } => write!(f, "remove_edge({u},{v})"),
        }
    }
}

/// A named construction trace that rebuilds one witness graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WitnessRecipe {
    /// Which construction family produced this trace.
    pub family_tag: &'static str,
    pub steps: Vec<RecipeStep>,
}

impl WitnessRecipe {
    /// Run the trace. Errors only on a malformed trace (stack underflow
    /// or a step that the underlying operation rejects).
    pub fn replay(&self) -> Result<Graph> {
        let mut stack: Vec<Graph> = Vec::new();
        let underflow = || Error::FormatError("recipe stack underflow".into());
        let zero_label = || Error::FormatError("recipe labels are one-based".into());
        for step in &self.steps {
            match *step {
                RecipeStep::Path { m } => stack.push(cons::path(m)?),
                RecipeStep::Cycle { m } => stack.push(cons::cycle(m)?),
                RecipeStep::Complete { m } => stack.push(cons::complete(m)?),
                RecipeStep::CompleteBipartite { a, b } => {
                    stack.push(cons::complete_bipartite(a, b)?)
                }
                RecipeStep::DisjointUnion => {
                    let h = stack.pop().ok_or_else(underflow)?;
                    let g = stack.pop().ok_or_else(underflow)?;
                    stack.push(cons::disjoint_union(&g, &h)?);
                }
                RecipeStep::Join => {
                    let h = stack.pop().ok_or_else(underflow)?;
                    let g = stack.pop().ok_or_else(underflow)?;
                    stack.push(cons::join(&g, &h)?);
                }
                RecipeStep::DuplicateVertex { v, times } => {
                    if v == 0 {
                        return Err(zero_label());
                    }
                    let g = stack.pop().ok_or_else(underflow)?;
                    stack.push(cons::duplicate_vertex(&g, v - 1, times)?);
                }
                RecipeStep::AddEdge { u, v } => {
                    if u == 0 || v == 0 {
                        return Err(zero_label());
                    }
                    let g = stack.pop().ok_or_else(underflow)?;
                    stack.push(g.with_edge(u - 1, v - 1)?);
                }
                RecipeStep::RemoveEdge { u, v } => {
                    if u == 0 || v == 0 {
                        return Err(zero_label());
                    }
                    let g = stack.pop().ok_or_else(underflow)?;
                    stack.push(g.without_edge(u - 1, v - 1)?);
                }
            }
        }
        match stack.len() {
            1 => Ok(stack.pop().expect("len checked")),
            _ => Err(Error::FormatError(format!(
                "recipe left {} graphs on the stack",
                stack.len()
            ))),
        }
    }
}

impl std::fmt::Display for WitnessRecipe {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "family: {}", self.family_tag)?;
        for (i, step) in self.steps.iter().enumerate() {
            writeln!(f, "  {:>2}. {step}", i + 1)?;
        }
        Ok(())
    }
}

/// Records steps while keeping the graph under construction live, so
/// callers can consult intermediate neighborhoods (the clique-filling
/// steps need them). All builder methods take zero-based labels and
/// store one-based ones.
pub(crate) struct RecipeBuilder {
    tag: &'static str,
    stack: Vec<Graph>,
    steps: Vec<RecipeStep>,
}

impl RecipeBuilder {
    pub fn new(tag: &'static str) -> Self {
        RecipeBuilder {
            tag,
            stack: Vec::new(),
            steps: Vec::new(),
        }
    }

    pub fn path(&mut self, m: usize) -> Result<&mut Self> {
        self.stack.push(cons::path(m)?);
        self.steps.push(RecipeStep::Path { m });
        Ok(self)
    }

    pub fn cycle(&mut self, m: usize) -> Result<&mut Self> {
        self.stack.push(cons::cycle(m)?);
        self.steps.push(RecipeStep::Cycle { m });
        Ok(self)
    }

    pub fn complete(&mut self, m: usize) -> Result<&mut Self> {
        self.stack.push(cons::complete(m)?);
        self.steps.push(RecipeStep::Complete { m });
        Ok(self)
    }

    pub fn complete_bipartite(&mut self, a: usize, b: usize) -> Result<&mut Self> {
        self.stack.push(cons::complete_bipartite(a, b)?);
        self.steps.push(RecipeStep::CompleteBipartite { a, b });
        Ok(self)
    }

    fn pop2(&mut self) -> (Graph, Graph) {
        let h = self.stack.pop().expect("builder stack");
        let g = self.stack.pop().expect("builder stack");
        (g, h)
    }

    pub fn disjoint_union(&mut self) -> Result<&mut Self> {
        let (g, h) = self.pop2();
        self.stack.push(cons::disjoint_union(&g, &h)?);
        self.steps.push(RecipeStep::DisjointUnion);
        Ok(self)
    }

    pub fn join(&mut self) -> Result<&mut Self> {
        let (g, h) = self.pop2();
        self.stack.push(cons::join(&g, &h)?);
        self.steps.push(RecipeStep::Join);
        Ok(self)
    }

    /// No-op when times = 0; zero-count steps are not recorded.
    pub fn duplicate_vertex(&mut self, v: usize, times: usize) -> Result<&mut Self> {
        if times == 0 {
            return Ok(self);
        }
        let g = self.stack.pop().expect("builder stack");
        self.stack.push(cons::duplicate_vertex(&g, v, times)?);
        self.steps
            .push(RecipeStep::DuplicateVertex { v: v + 1, times });
        Ok(self)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        let g = self.stack.pop().expect("builder stack");
        self.stack.push(g.with_edge(u, v)?);
        self.steps.push(RecipeStep::AddEdge { u: u + 1, v: v + 1 });
        Ok(self)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        let g = self.stack.pop().expect("builder stack");
        self.stack.push(g.without_edge(u, v)?);
        self.steps
            .push(RecipeStep::RemoveEdge { u: u + 1, v: v + 1 });
        Ok(self)
    }

    /// Add every missing edge inside N(v) of the current top graph,
    /// in ascending pair order.
    pub fn clique_neighborhood(&mut self, v: usize) -> Result<&mut Self> {
        let g = self.stack.last().expect("builder stack");
        let nbrs: Vec<usize> = (0..g.order()).filter(|&u| g.has_edge(v, u)).collect();
        let mut missing = Vec::new();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if !g.has_edge(a, b) {
                    missing.push((a, b));
                }
            }
        }
        for (a, b) in missing {
            self.add_edge(a, b)?;
        }
        Ok(self)
    }

    pub fn top(&self) -> &Graph {
        self.stack.last().expect("builder stack")
    }

    pub fn finish(self) -> WitnessRecipe {
        debug_assert_eq!(self.stack.len(), 1, "unconsumed construction operands");
        WitnessRecipe {
            family_tag: self.tag,
            steps: self.steps,
        }
    }
}
