//! Deterministic SVG (planar) and OBJ (spatial) emission from support points.

use cwlab_core::{Body, Dim, DirectionGrid, Result};

/// A closed polyline through the support point of every grid direction,
/// with the viewBox padded by 5%.
pub fn render_svg(body: &Body, m: usize) -> Result<String> {
    let grid = DirectionGrid::new(Dim::Two, m)?;
    let mut points = Vec::with_capacity(m);
    let (mut min_x, mut min_y) = (f64::INFINITY, f64::INFINITY);
    let (mut max_x, mut max_y) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for u in grid.directions() {
        let p = body.support_point(u)?;
        min_x = min_x.min(p.x());
        max_x = max_x.max(p.x());
        min_y = min_y.min(p.y());
        max_y = max_y.max(p.y());
        points.push((p.x(), p.y()));
    }
    let extent = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let pad = 0.05 * extent;
    let (x0, y0) = (min_x - pad, min_y - pad);
    let (w, h) = (max_x - min_x + 2.0 * pad, max_y - min_y + 2.0 * pad);
    let stroke = extent / 256.0;
    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{x0} {y0} {w} {h}\">\n<polygon points=\""
    );
    for (i, (x, y)) in points.iter().enumerate() {
        if i > 0 {
            svg.push(' ');
        }
        svg.push_str(&format!("{x},{y}"));
    }
    svg.push_str(&format!(
        "\" fill=\"none\" stroke=\"black\" stroke-width=\"{stroke}\"/>\n</svg>\n"
    ));
    Ok(svg)
}

/// Support points on the spiral grid as an OBJ vertex cloud, triangulated by
/// grid-index neighborhood.
pub fn render_obj(body: &Body, m: usize) -> Result<String> {
    let grid = DirectionGrid::new(Dim::Three, m)?;
    let mut obj = String::new();
    for u in grid.directions() {
        let p = body.support_point(u)?;
        obj.push_str(&format!("v {} {} {}\n", p.x(), p.y(), p.z()));
    }
    for i in 1..=m.saturating_sub(2) {
        obj.push_str(&format!("f {} {} {}\n", i, i + 1, i + 2));
    }
    Ok(obj)
}
