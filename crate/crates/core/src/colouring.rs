//! Vertex and arc colourings with an explicit palette size.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Digraph, Error, Result};

/// Colour ids `colour[v] < palette` for every vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexColouring {
    colours: Vec<u32>,
    palette: usize,
}

/// Colour ids for the arcs of a digraph, indexed in sorted arc order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArcColouring {
    colours: Vec<u32>,
    palette: usize,
}

fn check_range(colours: &[u32], palette: usize) -> Result<()> {
    match colours.iter().find(|&&c| c as usize >= palette) {
        Some(&colour) => Err(Error::ColourOutOfRange { colour, palette }),
        None => Ok(()),
    }
}

fn distinct(colours: &[u32], palette: usize) -> usize {
    let mut seen = vec![false; palette];
    let mut count = 0;
    for &c in colours {
        if !core::mem::replace(&mut seen[c as usize], true) {
            count += 1;
        }
    }
    count
}

fn palette_of(colours: &[u32]) -> usize {
    colours.iter().max().map_or(0, |&m| m as usize + 1)
}

impl VertexColouring {
    pub fn new(colours: Vec<u32>, palette: usize) -> Result<Self> {
        check_range(&colours, palette)?;
        Ok(VertexColouring { colours, palette })
    }

    /// Palette sized to the largest id present.
    pub fn from_colours(colours: Vec<u32>) -> Self {
        let palette = palette_of(&colours);
        VertexColouring { colours, palette }
    }

    /// Every vertex gets colour 0.
    pub fn constant(n: usize) -> Self {
        VertexColouring {
            colours: vec![0; n],
            palette: 1,
        }
    }

    /// Vertex `v` gets colour `v`.
    pub fn identity(n: usize) -> Self {
        VertexColouring {
            colours: (0..n as u32).collect(),
            palette: n,
        }
    }

    /// The empty palette; only meaningful when no path has an internal vertex.
    pub fn empty(n: usize) -> Self {
        VertexColouring {
            colours: vec![0; n],
            palette: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn colours(&self) -> &[u32] {
        &self.colours
    }

    pub fn colour(&self, v: usize) -> u32 {
        self.colours[v]
    }

    /// Number of distinct colours actually assigned.
    pub fn colours_used(&self) -> usize {
        if self.palette == 0 {
            return 0;
        }
        distinct(&self.colours, self.palette)
    }

    /// Renumbers colours in order of first appearance, shrinking the
    /// palette to the colours in use.
    pub fn compacted(&self) -> Self {
        if self.palette == 0 {
            return self.clone();
        }
        let (colours, palette) = compact(&self.colours, self.palette);
        VertexColouring { colours, palette }
    }

    pub(crate) fn check_order(&self, d: &Digraph) -> Result<()> {
        if self.colours.len() != d.order() {
            return Err(Error::SizeMismatch {
                expected: d.order(),
                found: self.colours.len(),
            });
        }
        Ok(())
    }
}

impl ArcColouring {
    pub fn new(colours: Vec<u32>, palette: usize) -> Result<Self> {
        check_range(&colours, palette)?;
        Ok(ArcColouring { colours, palette })
    }

    pub fn from_colours(colours: Vec<u32>) -> Self {
        let palette = palette_of(&colours);
        ArcColouring { colours, palette }
    }

    /// Builds a colouring of `d` from a colour per arc given by endpoints.
    pub fn from_fn<F>(d: &Digraph, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> u32,
    {
        ArcColouring::from_colours(d.arcs().iter().map(|&(u, v)| f(u, v)).collect())
    }

    /// Arc `i` gets colour `i`.
    pub fn identity(m: usize) -> Self {
        ArcColouring {
            colours: (0..m as u32).collect(),
            palette: m,
        }
    }

    pub fn constant(m: usize) -> Self {
        ArcColouring {
            colours: vec![0; m],
            palette: 1,
        }
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn colours(&self) -> &[u32] {
        &self.colours
    }

    /// Colour of the arc at index `i` of [`Digraph::arcs`].
    pub fn colour(&self, i: usize) -> u32 {
        self.colours[i]
    }

    pub fn colours_used(&self) -> usize {
        if self.palette == 0 {
            return 0;
        }
        distinct(&self.colours, self.palette)
    }

    pub fn compacted(&self) -> Self {
        if self.palette == 0 {
            return self.clone();
        }
        let (colours, palette) = compact(&self.colours, self.palette);
        ArcColouring { colours, palette }
    }

    pub(crate) fn check_size(&self, d: &Digraph) -> Result<()> {
        if self.colours.len() != d.arc_count() {
            return Err(Error::SizeMismatch {
                expected: d.arc_count(),
                found: self.colours.len(),
            });
        }
        Ok(())
    }
}

fn compact(colours: &[u32], palette: usize) -> (Vec<u32>, usize) {
    let mut map = vec![u32::MAX; palette];
    let mut next = 0;
    let out = colours
        .iter()
        .map(|&c| {
            let slot = &mut map[c as usize];
            if *slot == u32::MAX {
                *slot = next;
                next += 1;
            }
            *slot
        })
        .collect();
    (out, next as usize)
}
