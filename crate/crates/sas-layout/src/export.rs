//! Serialization surfaces: a lossless JSON schema for drawings, SVG
//! rendering, and markdown emission of the comparison tables.
//!
//! JSON keeps every coordinate as an exact `"p/q"` string, so export
//! followed by parse reproduces the drawing bit for bit; parsing rebuilds
//! through [`DrawingBuilder`] and so re-runs the full geometric validation.
//! SVG converts to floating point only at the final pixel-mapping step.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::crossing::{self, CrossKind};
use crate::model::{
    make_spec, rat_from_str, CircuitSpec, Drawing, DrawingBuilder, EdgeKind, LayoutError, Party,
    Point, Rat, VertexId,
};
use crate::verify::ComparisonRow;

/// Knobs for [`render_svg`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RenderOptions {
    /// Total image width in pixels; at least 64.
    pub width_px: u32,
    /// Draw overpass projections in a highlight color.
    pub highlight_overpasses: bool,
    /// Mark every waveguide crossing with a small circle.
    pub show_crossing_markers: bool,
    /// Print each vertex label next to its position.
    pub label_vertices: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            width_px: 640,
            highlight_overpasses: true,
            show_crossing_markers: false,
            label_vertices: true,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct VertexDoc {
    party: Party,
    index: i32,
    split_ordinal: u32,
    x: String,
    y: String,
}

#[derive(Serialize, Deserialize)]
struct EdgeDoc {
    from: VertexId,
    to: VertexId,
    kind: EdgeKind,
    route: Vec<[String; 2]>,
    stubs: Option<[Vec<[String; 2]>; 2]>,
}

#[derive(Serialize, Deserialize)]
struct ConnectionDoc {
    input: u32,
    output: u32,
    edges: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct DrawingDoc {
    spec: CircuitSpec,
    vertices: Vec<VertexDoc>,
    edges: Vec<EdgeDoc>,
    boundary: Option<Vec<[String; 2]>>,
    connections: Vec<ConnectionDoc>,
}

fn point_doc(p: &Point) -> [String; 2] {
    [p.x.to_string(), p.y.to_string()]
}

fn doc_point(d: &[String; 2]) -> Result<Point, LayoutError> {
    Ok(Point::new(rat_from_str(&d[0])?, rat_from_str(&d[1])?))
}

fn doc_points(ds: &[[String; 2]]) -> Result<Vec<Point>, LayoutError> {
    ds.iter().map(doc_point).collect()
}

/// Serializes a drawing into the documented JSON schema, with exact
/// rational coordinates. Deterministic for a given drawing.
pub fn export_drawing_json(drawing: &Drawing) -> String {
    let doc = DrawingDoc {
        spec: drawing.spec,
        vertices: drawing
            .positions
            .iter()
            .map(|(id, p)| VertexDoc {
                party: id.party,
                index: id.index,
                split_ordinal: id.split_ordinal,
                x: p.x.to_string(),
                y: p.y.to_string(),
            })
            .collect(),
        edges: drawing
            .edges
            .iter()
            .map(|e| EdgeDoc {
                from: e.from,
                to: e.to,
                kind: e.kind,
                route: e.route.iter().map(point_doc).collect(),
                stubs: e.stubs.as_ref().map(|(a, b)| {
                    [a.iter().map(point_doc).collect(), b.iter().map(point_doc).collect()]
                }),
            })
            .collect(),
        boundary: drawing
            .boundary
            .as_ref()
            .map(|poly| poly.iter().map(point_doc).collect()),
        connections: drawing
            .connection_map
            .iter()
            .map(|(&(input, output), trace)| ConnectionDoc {
                input,
                output,
                edges: trace.edge_sequence.clone(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("schema types always serialize");
    text.push('\n');
    text
}

/// Parses the documented JSON schema back into a drawing. The result is
/// rebuilt through the drawing builder, so it passes the same geometric
/// validation as a freshly synthesized drawing and `export(parse(export(d)))`
/// equals `export(d)` byte for byte.
pub fn parse_drawing_json(text: &str) -> Result<Drawing, LayoutError> {
    let doc: DrawingDoc =
        serde_json::from_str(text).map_err(|e| LayoutError::BadDocument(e.to_string()))?;
    let spec = make_spec(doc.spec.m, doc.spec.n, doc.spec.coupling, doc.spec.style)?;
    let mut b = DrawingBuilder::new(spec);
    for v in &doc.vertices {
        let id = VertexId { party: v.party, index: v.index, split_ordinal: v.split_ordinal };
        b.vertex(id, Point::new(rat_from_str(&v.x)?, rat_from_str(&v.y)?));
    }
    for (k, e) in doc.edges.iter().enumerate() {
        let route = doc_points(&e.route)?;
        match (e.kind, &e.stubs) {
            (EdgeKind::Planar, None) => {
                b.planar_edge(e.from, e.to, route);
            }
            (EdgeKind::Planar, Some(_)) => return Err(LayoutError::UnexpectedStubs(k)),
            (EdgeKind::Overpass, Some([a, z])) => {
                b.overpass_edge(e.from, e.to, doc_points(a)?, route, doc_points(z)?);
            }
            (EdgeKind::Overpass, None) => return Err(LayoutError::MissingStubs(k)),
        }
    }
    if let Some(poly) = &doc.boundary {
        b.boundary(doc_points(poly)?);
    }
    for c in &doc.connections {
        b.connect(c.input, c.output, c.edges.clone());
    }
    crossing::finalize(b)
}

fn approx(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

fn fmt_px(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.3}")
}

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
    pad: f64,
}

impl Frame {
    fn map(&self, p: &Point) -> (f64, f64) {
        let x = self.pad + (approx(&p.x) - self.min_x) * self.scale;
        let y = self.pad + (self.max_y - approx(&p.y)) * self.scale;
        (x, y)
    }

    fn points_attr(&self, poly: &[Point]) -> String {
        poly.iter()
            .map(|p| {
                let (x, y) = self.map(p);
                format!("{},{}", fmt_px(x), fmt_px(y))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn polyline(out: &mut String, frame: &Frame, poly: &[Point], stroke: &str, dashed: bool) {
    let dash = if dashed { " stroke-dasharray=\"6 4\"" } else { "" };
    out.push_str(&format!(
        "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"{}/>\n",
        frame.points_attr(poly),
        stroke,
        dash
    ));
}

/// Renders a drawing as deterministic SVG 1.1: solid waveguides, dashed
/// overpass projections, optional crossing markers and vertex labels.
pub fn render_svg(drawing: &Drawing, opts: &RenderOptions) -> Result<String, LayoutError> {
    if opts.width_px < 64 {
        return Err(LayoutError::RenderTooNarrow(opts.width_px));
    }
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut take = |p: &Point| {
        xs.push(approx(&p.x));
        ys.push(approx(&p.y));
    };
    for p in drawing.positions.values() {
        take(p);
    }
    for e in &drawing.edges {
        e.route.iter().for_each(&mut take);
        if let Some((a, z)) = &e.stubs {
            a.iter().for_each(&mut take);
            z.iter().for_each(&mut take);
        }
    }
    if let Some(poly) = &drawing.boundary {
        poly.iter().for_each(&mut take);
    }
    let min = |v: &[f64]| v.iter().copied().fold(f64::INFINITY, f64::min);
    let max = |v: &[f64]| v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (min_x, max_x, min_y, max_y) = (min(&xs), max(&xs), min(&ys), max(&ys));
    let span_x = (max_x - min_x).max(1e-9);
    let span_y = (max_y - min_y).max(1e-9);

    let width = f64::from(opts.width_px);
    let pad = width / 16.0;
    let scale = (width - 2.0 * pad) / span_x;
    let height = (span_y * scale + 2.0 * pad).ceil();
    let frame = Frame { min_x, max_y, scale, pad };

    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" \
         viewBox=\"0 0 {} {}\">\n",
        opts.width_px, height, opts.width_px, height
    );
    if let Some(poly) = &drawing.boundary {
        out.push_str(&format!(
            "<polygon points=\"{}\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n",
            frame.points_attr(poly)
        ));
    }
    for e in &drawing.edges {
        match e.kind {
            EdgeKind::Planar => polyline(&mut out, &frame, &e.route, "#222222", false),
            EdgeKind::Overpass => {
                let stroke = if opts.highlight_overpasses { "#cc2222" } else { "#222222" };
                if let Some((a, z)) = &e.stubs {
                    polyline(&mut out, &frame, a, "#222222", false);
                    polyline(&mut out, &frame, z, "#222222", false);
                }
                polyline(&mut out, &frame, &e.route, stroke, true);
            }
        }
    }
    if opts.show_crossing_markers {
        for ev in crossing::crossing_events(drawing)? {
            if ev.kind == CrossKind::Planar {
                let (x, y) = frame.map(&ev.at);
                out.push_str(&format!(
                    "<circle class=\"crossing\" cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"none\" \
                     stroke=\"#0066cc\" stroke-width=\"1.2\"/>\n",
                    fmt_px(x),
                    fmt_px(y)
                ));
            }
        }
    }
    if opts.label_vertices {
        for (id, p) in &drawing.positions {
            let (x, y) = frame.map(p);
            out.push_str(&format!(
                "<text x=\"{}\" y=\"{}\" font-size=\"10\" font-family=\"monospace\" \
                 fill=\"#444444\">{}</text>\n",
                fmt_px(x + 4.0),
                fmt_px(y - 4.0),
                id.label()
            ));
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Renders comparison rows as a plain markdown table, one size per row,
/// with no locale formatting.
pub fn comparison_table_markdown(rows: &[ComparisonRow]) -> String {
    let mut out = String::from(
        "size | crossings | LE overpasses | BT overpasses | worst-path crossings | \
         worst-path overpasses\n--- | --- | --- | --- | --- | ---\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{n}\u{d7}{n} | {} | {} | {} | {} | {}\n",
            r.crossings,
            r.overpasses_le,
            r.overpasses_bt,
            r.worst_path_crossings,
            r.worst_path_overpasses,
            n = r.n
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Coupling, Style};
    use crate::{facet, surface, verify};

    fn catalog() -> Vec<Drawing> {
        vec![
            surface::build_basic_surface_drawing(2, 2).unwrap(),
            surface::build_zarankiewicz_drawing(5, 4).unwrap(),
            surface::place_wop_bt_surface(4, 4).unwrap(),
            facet::place_wop_le_facet(5, 4).unwrap(),
            facet::build_interleaved_facet_drawing(4).unwrap(),
            facet::clustered_rerouted_4x4().unwrap(),
        ]
    }

    #[test]
    fn round_trip_is_byte_identical_across_the_catalog() {
        for d in catalog() {
            let first = export_drawing_json(&d);
            let parsed = parse_drawing_json(&first).unwrap();
            assert_eq!(parsed, d);
            assert_eq!(export_drawing_json(&parsed), first);
        }
    }

    #[test]
    fn round_trip_covers_the_small_sweep() {
        for m in [2u32, 3, 5, 8] {
            for n in [2u32, 3, 5, 8] {
                for d in [
                    surface::build_zarankiewicz_drawing(m, n).unwrap(),
                    facet::place_wop_le_facet(m, n).unwrap(),
                ] {
                    let first = export_drawing_json(&d);
                    assert_eq!(parse_drawing_json(&first).unwrap(), d, "{m} x {n}");
                }
            }
        }
    }

    #[test]
    fn documents_match_the_declared_schema() {
        let doc: serde_json::Value =
            serde_json::from_str(&export_drawing_json(
                &surface::build_basic_surface_drawing(2, 2).unwrap(),
            ))
            .unwrap();
        assert_eq!(doc["spec"]["coupling"], "Surface");
        assert_eq!(doc["vertices"].as_array().unwrap().len(), 4);
        assert_eq!(doc["edges"].as_array().unwrap().len(), 4);
        assert_eq!(doc["connections"].as_array().unwrap().len(), 4);
        let v = &doc["vertices"][0];
        for key in ["party", "index", "split_ordinal", "x", "y"] {
            assert!(!v[key].is_null(), "missing {key}");
        }
        assert!(doc["boundary"].is_null());
        assert_eq!(doc["edges"][0]["route"][0].as_array().unwrap().len(), 2);

        let bt: serde_json::Value = serde_json::from_str(&export_drawing_json(
            &surface::place_wop_bt_surface(4, 4).unwrap(),
        ))
        .unwrap();
        let overpasses = bt["edges"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|e| e["kind"] == "Overpass")
            .count();
        assert_eq!(overpasses, 2);

        let fac: serde_json::Value = serde_json::from_str(&export_drawing_json(
            &facet::place_wop_le_facet(5, 4).unwrap(),
        ))
        .unwrap();
        assert!(fac["boundary"].is_array());
        let text = export_drawing_json(&facet::place_wop_le_facet(5, 4).unwrap());
        assert!(text.contains('/'), "expected at least one fractional coordinate");
    }

    #[test]
    fn malformed_documents_are_rejected() {
        assert!(matches!(
            parse_drawing_json("nonsense"),
            Err(LayoutError::BadDocument(_))
        ));
        assert!(matches!(
            parse_drawing_json("{\"spec\": {\"m\": 2}}"),
            Err(LayoutError::BadDocument(_))
        ));

        let good = export_drawing_json(&surface::build_basic_surface_drawing(2, 2).unwrap());
        let mut doc: serde_json::Value = serde_json::from_str(&good).unwrap();
        doc["edges"][0]["from"]["index"] = serde_json::json!(99);
        assert!(matches!(
            parse_drawing_json(&doc.to_string()),
            Err(LayoutError::UnknownEndpoint { .. })
        ));

        let mut doc: serde_json::Value = serde_json::from_str(&good).unwrap();
        doc["vertices"][0]["x"] = serde_json::json!("1/0");
        assert!(matches!(
            parse_drawing_json(&doc.to_string()),
            Err(LayoutError::BadRational(_))
        ));
    }

    #[test]
    fn svg_marks_overpasses_dashed_and_crossings_circled() {
        let opts = RenderOptions::default();
        let wop = surface::place_wop_le_surface(5, 5).unwrap();
        let svg = render_svg(&wop, &opts).unwrap();
        assert_eq!(svg.matches("stroke-dasharray").count(), 9);
        assert_eq!(render_svg(&wop, &opts).unwrap(), svg);

        let star = surface::build_basic_surface_drawing(1, 3).unwrap();
        let svg = render_svg(&star, &opts).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 3);
        assert_eq!(svg.matches("stroke-dasharray").count(), 0);

        let inter = facet::build_interleaved_facet_drawing(4).unwrap();
        let marked = RenderOptions { show_crossing_markers: true, ..RenderOptions::default() };
        let svg = render_svg(&inter, &marked).unwrap();
        assert_eq!(svg.matches("class=\"crossing\"").count(), 16);

        assert_eq!(
            render_svg(&star, &RenderOptions { width_px: 63, ..RenderOptions::default() }),
            Err(LayoutError::RenderTooNarrow(63))
        );
    }

    #[test]
    fn facet_renders_include_the_boundary_polygon() {
        let d = facet::build_clustered_facet_drawing(3, 3).unwrap();
        let svg = render_svg(&d, &RenderOptions::default()).unwrap();
        assert_eq!(svg.matches("<polygon").count(), 1);
        let s = surface::build_zarankiewicz_drawing(3, 3).unwrap();
        assert_eq!(render_svg(&s, &RenderOptions::default()).unwrap().matches("<polygon").count(), 0);
    }

    #[test]
    fn tables_render_as_markdown() {
        let t = verify::reproduce_tables();
        let one = comparison_table_markdown(&t.surface);
        assert!(one.ends_with("64\u{d7}64 | 984064 | 3844 | 1922 | 961 | 1\n"), "{one}");
        assert_eq!(one.lines().count(), 7);
        let two = comparison_table_markdown(&t.facet);
        assert!(two.contains("4\u{d7}4 | 16 | 9 | 5 | 4 | 1"));
        assert!(two.ends_with("64\u{d7}64 | 2666496 | 3969 | 1985 | 1984 | 1\n"));
    }

    #[test]
    fn parse_validates_the_rebuilt_geometry() {
        let good = export_drawing_json(&surface::build_basic_surface_drawing(2, 2).unwrap());
        let mut doc: serde_json::Value = serde_json::from_str(&good).unwrap();
        let connections = doc["connections"].as_array_mut().unwrap();
        connections.pop();
        assert!(matches!(
            parse_drawing_json(&doc.to_string()),
            Err(LayoutError::IncompleteConnectionMap { .. })
        ));
        let spec = make_spec(2, 2, Coupling::Surface, Style::LumpedElement).unwrap();
        assert_eq!(parse_drawing_json(&good).unwrap().spec, spec);
    }
}
