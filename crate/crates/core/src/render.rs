//! Deterministic text, SVG, and JSON renderings of the two diagram kinds.
//!
//! Text glyph table (format `viennot-ascii/1`, `updown-ascii/1`): `•` marks a
//! dot, `x` a cross, `+` a lattice point touched by segments, `.` a bare
//! lattice point. A unit horizontal segment prints as `-c-` and a unit
//! vertical segment as the bare color character `c` on the interleaved line,
//! where `c` is `1`..`9` then `a`..`z`. Rows are labeled with their
//! b-coordinate on the left and columns with their t-coordinate along the
//! bottom.
//!
//! SVG paints one polyline per lattice path, with strokes cycling
//! red < orange < green < blue < black and rotating hue past the fifth
//! color. JSON dumps the full segment→color maps. Every format carries a
//! version header field.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::diagram::{Color, SegmentMap, ViennotDiagram};
use crate::updown::UpDownDiagram;

/// Everything the renderers need, independent of diagram kind.
struct Scene<'a> {
    kind: &'static str,
    k: usize,
    columns: usize,
    dots: &'a [(usize, usize)],
    crosses: &'a [(usize, usize)],
    hsegs: &'a SegmentMap,
    vsegs: &'a SegmentMap,
    top_exit: &'a BTreeMap<usize, Color>,
    right_exit: Option<&'a BTreeMap<usize, Color>>,
}

impl<'a> From<&'a ViennotDiagram> for Scene<'a> {
    fn from(d: &'a ViennotDiagram) -> Self {
        Scene {
            kind: "viennot",
            k: d.k(),
            columns: d.k(),
            dots: d.dots(),
            crosses: &[],
            hsegs: d.hsegs(),
            vsegs: d.vsegs(),
            top_exit: d.top_exit(),
            right_exit: Some(d.right_exit()),
        }
    }
}

impl<'a> From<&'a UpDownDiagram> for Scene<'a> {
    fn from(d: &'a UpDownDiagram) -> Self {
        Scene {
            kind: "updown",
            k: d.k(),
            columns: d.steps(),
            dots: d.dots(),
            crosses: d.crosses(),
            hsegs: d.hsegs(),
            vsegs: d.vsegs(),
            top_exit: d.top_exit(),
            right_exit: None,
        }
    }
}

pub fn ascii_viennot(d: &ViennotDiagram) -> String {
    ascii(&Scene::from(d))
}

pub fn ascii_updown(d: &UpDownDiagram) -> String {
    ascii(&Scene::from(d))
}

pub fn svg_viennot(d: &ViennotDiagram) -> String {
    svg(&Scene::from(d))
}

pub fn svg_updown(d: &UpDownDiagram) -> String {
    svg(&Scene::from(d))
}

pub fn json_viennot(d: &ViennotDiagram) -> String {
    json(&Scene::from(d))
}

pub fn json_updown(d: &UpDownDiagram) -> String {
    json(&Scene::from(d))
}

fn color_char(c: Color) -> char {
    match c.index() {
        i @ 1..=9 => (b'0' + i as u8) as char,
        i @ 10..=35 => (b'a' + (i - 10) as u8) as char,
        _ => '#',
    }
}

fn ascii(scene: &Scene) -> String {
    let mut out = format!("# {}-ascii/1\n", scene.kind);
    if scene.columns == 0 {
        out.push_str("(empty)\n");
        return out;
    }
    let label_w = scene.k.to_string().len().max(2);
    let pitch = 4;
    let col = |t: usize| label_w + 1 + (t - 1) * pitch;
    let width = label_w + 1 + scene.columns * pitch;

    let mut lines: Vec<String> = Vec::new();
    for b in (1..=scene.k).rev() {
        // Vertical segments (t,b)→(t,b+1) sit between this node line and the
        // one above it.
        let mut vline = vec![' '; width];
        for t in 1..=scene.columns {
            if let Some(&c) = scene.vsegs.get(&(t, b)) {
                vline[col(t)] = color_char(c);
            }
        }
        lines.push(vline.into_iter().collect());

        let mut nline = vec![' '; width];
        let label = format!("{b:>label_w$}");
        nline[..label_w].copy_from_slice(&label.chars().collect::<Vec<_>>());
        for t in 1..=scene.columns {
            let at = (t, b);
            let x = col(t);
            nline[x] = if scene.dots.contains(&at) {
                '•'
            } else if scene.crosses.contains(&at) {
                'x'
            } else if scene.hsegs.contains_key(&at)
                || scene.vsegs.contains_key(&at)
                || (t > 1 && scene.hsegs.contains_key(&(t - 1, b)))
                || (b > 1 && scene.vsegs.contains_key(&(t, b - 1)))
            {
                '+'
            } else {
                '.'
            };
            if let Some(&c) = scene.hsegs.get(&at) {
                nline[x + 1] = '-';
                nline[x + 2] = color_char(c);
                nline[x + 3] = '-';
            }
        }
        lines.push(nline.into_iter().collect());
    }

    let mut axis = vec![' '; width];
    for t in 1..=scene.columns {
        for (i, ch) in t.to_string().chars().enumerate() {
            axis[col(t) + i] = ch;
        }
    }
    lines.push(axis.into_iter().collect());

    for line in lines {
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn stroke(c: Color) -> String {
    match c.index() {
        1 => "red".into(),
        2 => "orange".into(),
        3 => "green".into(),
        4 => "blue".into(),
        5 => "black".into(),
        i => format!("hsl({},70%,45%)", ((i - 6) * 67) % 360),
    }
}

/// Maximal same-colored lattice paths as vertex lists, traversed downward
/// and rightward from each point with no same-colored incoming segment.
fn lattice_paths(scene: &Scene, c: Color) -> Vec<Vec<(usize, usize)>> {
    let is = |map: &SegmentMap, key: (usize, usize)| map.get(&key) == Some(&c);
    let mut starts: Vec<(usize, usize)> = Vec::new();
    let mut consider = |p: (usize, usize)| {
        let (t, b) = p;
        let outgoing = is(scene.vsegs, (t, b.wrapping_sub(1))) || is(scene.hsegs, (t, b));
        let incoming = is(scene.vsegs, (t, b)) || (t > 1 && is(scene.hsegs, (t - 1, b)));
        if outgoing && !incoming {
            starts.push(p);
        }
    };
    for (&(t, b), &col) in scene.vsegs {
        if col == c {
            consider((t, b + 1));
        }
    }
    for (&(t, b), &col) in scene.hsegs {
        if col == c {
            consider((t, b));
        }
    }
    starts.sort_unstable();
    starts.dedup();

    starts
        .into_iter()
        .map(|start| {
            let (mut t, mut b) = start;
            let mut vertices = vec![start];
            loop {
                if is(scene.vsegs, (t, b.wrapping_sub(1))) {
                    while b > 1 && is(scene.vsegs, (t, b - 1)) {
                        b -= 1;
                    }
                } else if is(scene.hsegs, (t, b)) {
                    while is(scene.hsegs, (t, b)) {
                        t += 1;
                    }
                } else {
                    break;
                }
                vertices.push((t, b));
            }
            vertices
        })
        .collect()
}

fn svg(scene: &Scene) -> String {
    const S: usize = 24;
    let w = (scene.columns + 2) * S;
    let h = (scene.k + 2) * S;
    let x = |t: usize| t * S;
    let y = |b: usize| (scene.k + 1 - b) * S;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {w} {h}\" \
         data-format-version=\"1\" data-kind=\"{}\">\n",
        scene.kind
    ));
    out.push_str("  <g stroke=\"#ddd\" stroke-width=\"1\">\n");
    for t in 1..=scene.columns {
        out.push_str(&format!(
            "    <line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>\n",
            x(t),
            y(scene.k + 1),
            y(0),
        ));
    }
    for b in 1..=scene.k {
        out.push_str(&format!(
            "    <line x1=\"{0}\" y1=\"{2}\" x2=\"{1}\" y2=\"{2}\"/>\n",
            x(0),
            x(scene.columns + 1),
            y(b),
        ));
    }
    out.push_str("  </g>\n");

    let max_color = scene.hsegs.values().copied().max();
    if let Some(top) = max_color {
        for ci in 1..=top.index() {
            let c = Color::new(ci).expect("index is positive");
            for path in lattice_paths(scene, c) {
                let points: Vec<String> = path
                    .iter()
                    .map(|&(t, b)| format!("{},{}", x(t), y(b)))
                    .collect();
                out.push_str(&format!(
                    "  <polyline fill=\"none\" stroke=\"{}\" stroke-width=\"3\" points=\"{}\"/>\n",
                    stroke(c),
                    points.join(" ")
                ));
            }
        }
    }

    for &(t, b) in scene.dots {
        out.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"black\"/>\n",
            x(t),
            y(b)
        ));
    }
    for &(t, b) in scene.crosses {
        let (cx, cy) = (x(t) as i64, y(b) as i64);
        out.push_str(&format!(
            "  <path d=\"M{} {}l12 12m0 -12l-12 12\" stroke=\"black\" stroke-width=\"3\"/>\n",
            cx - 6,
            cy - 6
        ));
    }

    out.push_str("  <g font-size=\"10\" fill=\"#555\" text-anchor=\"middle\">\n");
    for t in 1..=scene.columns {
        out.push_str(&format!(
            "    <text x=\"{}\" y=\"{}\">{t}</text>\n",
            x(t),
            h - 4
        ));
    }
    for b in 1..=scene.k {
        out.push_str(&format!(
            "    <text x=\"6\" y=\"{}\">{b}</text>\n",
            y(b) + 3
        ));
    }
    out.push_str("  </g>\n</svg>\n");
    out
}

#[derive(Serialize)]
struct DiagramDump<'a> {
    format_version: u32,
    kind: &'static str,
    k: usize,
    columns: usize,
    dots: &'a [(usize, usize)],
    #[serde(skip_serializing_if = "Option::is_none")]
    crosses: Option<&'a [(usize, usize)]>,
    hsegs: Vec<(usize, usize, usize)>,
    vsegs: Vec<(usize, usize, usize)>,
    top_exit: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    right_exit: Option<Vec<(usize, usize)>>,
}

fn json(scene: &Scene) -> String {
    let seg_list = |m: &SegmentMap| -> Vec<(usize, usize, usize)> {
        m.iter().map(|(&(t, b), &c)| (t, b, c.index())).collect()
    };
    let exit_list = |m: &BTreeMap<usize, Color>| -> Vec<(usize, usize)> {
        m.iter().map(|(&k, &c)| (k, c.index())).collect()
    };
    let dump = DiagramDump {
        format_version: 1,
        kind: scene.kind,
        k: scene.k,
        columns: scene.columns,
        dots: scene.dots,
        crosses: (scene.kind == "updown").then_some(scene.crosses),
        hsegs: seg_list(scene.hsegs),
        vsegs: seg_list(scene.vsegs),
        top_exit: exit_list(scene.top_exit),
        right_exit: scene.right_exit.map(exit_list),
    };
    let mut s = serde_json::to_string_pretty(&dump).expect("dump serializes");
    s.push('\n');
    s
}
