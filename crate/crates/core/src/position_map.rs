//! Spatial hash for hit-testing marks.
//!
//! Positions are sampled once per [`PositionMap::build`] and bucketed into a
//! uniform grid of square cells. Queries read those frozen positions;
//! rebuild after advancing if hit-testing must follow an animation.

use std::cell::Cell;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::mark::{Mark, MarkId};
use crate::render_group::MarkRenderGroup;

type CellKey = (i64, i64);

#[derive(Debug, Clone)]
struct Entry {
    id: MarkId,
    x: f64,
    y: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Hit {
    pub id: MarkId,
    pub distance: f64,
}

#[derive(Debug)]
pub struct PositionMap {
    cell_size: f64,
    /// Indexed marks in build order; cells hold indices into this.
    entries: Vec<Entry>,
    cells: HashMap<CellKey, Vec<usize>>,
    skipped: Vec<MarkId>,
    generation: u64,
    last_cells_inspected: Cell<usize>,
}

impl PositionMap {
    pub fn new(cell_size: f64) -> Result<Self> {
        if !cell_size.is_finite() || cell_size <= 0.0 {
            return Err(Error::InvalidCellSize(cell_size));
        }
        Ok(Self {
            cell_size,
            entries: Vec::new(),
            cells: HashMap::new(),
            skipped: Vec::new(),
            generation: 0,
            last_cells_inspected: Cell::new(0),
        })
    }

    /// Cells sized to the typical query radius, so a query touches at most
    /// a 3x3 block.
    pub fn for_query_radius(radius: f64) -> Result<Self> {
        Self::new(radius)
    }

    /// Fallback sizing: viewport diagonal / 64.
    pub fn for_viewport(width: f64, height: f64) -> Result<Self> {
        Self::new(width.hypot(height) / 64.0)
    }

    pub fn cell_size(&self) -> f64 {
        self.cell_size
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of completed builds.
    pub fn generation(&self) -> u64 {
        self.generation
    }

    /// Marks left out of the last build for lacking a finite position.
    pub fn skipped(&self) -> &[MarkId] {
        &self.skipped
    }

    /// Grid cells examined by the most recent query.
    pub fn last_cells_inspected(&self) -> usize {
        self.last_cells_inspected.get()
    }

    pub fn cell_of(&self, x: f64, y: f64) -> (i64, i64) {
        ((x / self.cell_size).floor() as i64, (y / self.cell_size).floor() as i64)
    }

    /// Re-indexes the group's momentary stage using momentary `x_attr` and
    /// `y_attr` values.
    pub fn build(&mut self, group: &MarkRenderGroup, x_attr: &str, y_attr: &str) {
        self.build_with(group, |m| Some((m.number(x_attr).ok()?, m.number(y_attr).ok()?)));
    }

    /// Re-indexes the group's momentary stage with a custom accessor.
    pub fn build_with(&mut self, group: &MarkRenderGroup, position: impl Fn(&Mark) -> Option<(f64, f64)>) {
        let points = group.stage().map(|m| (m.id().clone(), position(m)));
        self.build_from_points(points);
    }

    /// Re-indexes raw `(id, position)` pairs. Missing or non-finite
    /// positions are skipped and recorded.
    pub fn build_from_points(&mut self, points: impl IntoIterator<Item = (MarkId, Option<(f64, f64)>)>) {
        self.entries.clear();
        self.cells.clear();
        self.skipped.clear();
        for (id, pos) in points {
            match pos {
                Some((x, y)) if x.is_finite() && y.is_finite() => {
                    let key = self.cell_of(x, y);
                    self.cells.entry(key).or_default().push(self.entries.len());
                    self.entries.push(Entry { id, x, y });
                }
                _ => self.skipped.push(id),
            }
        }
        self.generation += 1;
    }

    /// Every indexed mark within `radius` of `(x, y)`, nearest first; equal
    /// distances keep build order.
    pub fn marks_near(&self, x: f64, y: f64, radius: f64) -> Result<Vec<Hit>> {
        if radius.is_nan() || radius < 0.0 {
            return Err(Error::NegativeRadius(radius));
        }
        let mut found: Vec<(f64, usize)> = Vec::new();
        let mut check = |i: usize| {
            let e = &self.entries[i];
            let (dx, dy) = (e.x - x, e.y - y);
            let d = (dx * dx + dy * dy).sqrt();
            if d <= radius {
                found.push((d, i));
            }
        };

        let (cx0, cy0) = self.cell_of(x - radius, y - radius);
        let (cx1, cy1) = self.cell_of(x + radius, y + radius);
        let span = (cx1 as f64 - cx0 as f64 + 1.0) * (cy1 as f64 - cy0 as f64 + 1.0);
        let mut inspected = 0;
        if span <= self.cells.len() as f64 {
            for cx in cx0..=cx1 {
                for cy in cy0..=cy1 {
                    inspected += 1;
                    if let Some(bucket) = self.cells.get(&(cx, cy)) {
                        bucket.iter().copied().for_each(&mut check);
                    }
                }
            }
        } else {
            // the query square covers more cells than are occupied
            for (&(cx, cy), bucket) in &self.cells {
                if (cx0..=cx1).contains(&cx) && (cy0..=cy1).contains(&cy) {
                    inspected += 1;
                    bucket.iter().copied().for_each(&mut check);
                }
            }
        }
        self.last_cells_inspected.set(inspected);

        found.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        Ok(found
            .into_iter()
            .map(|(distance, i)| Hit {
                id: self.entries[i].id.clone(),
                distance,
            })
            .collect())
    }

    /// The nearest mark within `radius`, if any.
    pub fn hit_test(&self, x: f64, y: f64, radius: f64) -> Result<Option<MarkId>> {
        Ok(self.marks_near(x, y, radius)?.into_iter().next().map(|h| h.id))
    }
}
