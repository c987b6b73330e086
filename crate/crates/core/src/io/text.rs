//! The line-oriented text format for algebras, soft sets and maps.
//!
//! ```text
//! [field Z2]
//! elements = 2
//! add:
//! row 0: 0 1
//! row 1: 1 0
//! mul:
//! row 0: 0 0
//! row 1: 0 1
//!
//! [hvs V]
//! field = Z2
//! group = Z4
//! elements = 4
//! hyperop:
//! row 0: {0 2} {0} {0} {0}
//! row 1: {0 2} {1 2 3} {0 2} {1 2 3}
//!
//! [bfss F]
//! elements = 4
//! param c: pos = 1/2 3/10 1/2 3/10 ; neg = -2/5 -1/5 -2/5 -1/5
//!
//! [map T]
//! from = V
//! to = V
//! elements = 4
//! phi = 0 3 2 1
//! param c -> c
//! ```
//!
//! `#` starts a comment. Degrees may be written as fractions or exact
//! decimals; printing always emits lowest-terms fractions and sorted
//! parameters, so `print` is canonical.

use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};

use crate::algebra::{AbelianGroup, FiniteField, HyperVectorSpace, Subset, MAX_ELEMENTS};
use crate::bipolar::BipolarFuzzySet;
use crate::rational::Rational;
use crate::soft::BipolarFuzzySoftSet;
use crate::transform::FuzzySoftFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    DanglingReference,
    Dimension,
    DegreeRange,
    Invalid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub source: String,
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.source.is_empty() {
            write!(f, "{}:", self.source)?;
        }
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Section {
    Field { name: String, field: FiniteField },
    Group { name: String, group: AbelianGroup },
    Hvs { name: String, field: String, group: String, space: HyperVectorSpace },
    Bfss { name: String, set: BipolarFuzzySoftSet },
    Map { name: String, from: String, to: String, function: FuzzySoftFunction },
}

impl Section {
    pub fn name(&self) -> &str {
        match self {
            Section::Field { name, .. }
            | Section::Group { name, .. }
            | Section::Hvs { name, .. }
            | Section::Bfss { name, .. }
            | Section::Map { name, .. } => name,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Section::Field { .. } => "field",
            Section::Group { .. } => "group",
            Section::Hvs { .. } => "hvs",
            Section::Bfss { .. } => "bfss",
            Section::Map { .. } => "map",
        }
    }
}

/// A parsed and fully resolved set of sections, in input order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Document {
    pub sections: Vec<Section>,
}

impl Document {
    pub fn get(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name() == name)
    }

    pub fn of_kind<'a>(&'a self, kind: &'a str) -> impl Iterator<Item = &'a Section> + 'a {
        self.sections.iter().filter(move |s| s.kind() == kind)
    }

    pub fn hvs(&self, name: &str) -> Option<&HyperVectorSpace> {
        match self.get(name) {
            Some(Section::Hvs { space, .. }) => Some(space),
            _ => None,
        }
    }

    pub fn bfss(&self, name: &str) -> Option<&BipolarFuzzySoftSet> {
        match self.get(name) {
            Some(Section::Bfss { set, .. }) => Some(set),
            _ => None,
        }
    }

    /// Appends sections for a standalone hypervector space: its field,
    /// group and the space itself, named `{name}.K`, `{name}.V`, `name`.
    pub fn push_hvs(&mut self, name: &str, space: &HyperVectorSpace) {
        let (k, v) = (format!("{name}.K"), format!("{name}.V"));
        self.sections.push(Section::Field { name: k.clone(), field: space.field().clone() });
        self.sections.push(Section::Group { name: v.clone(), group: space.group().clone() });
        self.sections.push(Section::Hvs { name: name.into(), field: k, group: v, space: space.clone() });
    }

    pub fn push_bfss(&mut self, name: &str, set: &BipolarFuzzySoftSet) {
        self.sections.push(Section::Bfss { name: name.into(), set: set.clone() });
    }
}

pub fn parse(text: &str) -> Result<Document, ParseError> {
    parse_sources(&[("", text)])
}

/// Parses several sources as one document; references may cross sources.
pub fn parse_sources(sources: &[(&str, &str)]) -> Result<Document, ParseError> {
    let mut raws = Vec::new();
    for (label, text) in sources {
        raws.extend(split_sections(label, text)?);
    }
    resolve(raws)
}

// ---------------------------------------------------------------------------
// Lexing into raw sections

#[derive(Debug, Clone)]
struct Pos {
    source: String,
    line: usize,
    column: usize,
}

impl Pos {
    fn err(&self, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
        ParseError { source: self.source.clone(), line: self.line, column: self.column, kind, message: message.into() }
    }

    fn at(&self, column: usize) -> Pos {
        Pos { column, ..self.clone() }
    }
}

/// One body line with its column offset preserved.
#[derive(Debug, Clone)]
struct Line {
    pos: Pos,
    text: String,
}

#[derive(Debug)]
struct RawSection {
    kind: String,
    name: String,
    header: Pos,
    lines: Vec<Line>,
}

fn split_sections(label: &str, text: &str) -> Result<Vec<RawSection>, ParseError> {
    let mut out: Vec<RawSection> = Vec::new();
    for (i, raw_line) in text.lines().enumerate() {
        let content = raw_line.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        let indent = content.len() - trimmed.len();
        let trimmed = trimmed.trim_end();
        if trimmed.is_empty() {
            continue;
        }
        let pos = Pos { source: label.to_string(), line: i + 1, column: indent + 1 };
        if let Some(rest) = trimmed.strip_prefix('[') {
            let inner = rest
                .strip_suffix(']')
                .ok_or_else(|| pos.err(ParseErrorKind::Syntax, "section header must end with `]`"))?;
            let mut parts = inner.split_whitespace();
            let (Some(kind), Some(name), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(pos.err(ParseErrorKind::Syntax, "section header must be `[kind name]`"));
            };
            if !matches!(kind, "field" | "group" | "hvs" | "bfss" | "map") {
                return Err(pos
                    .at(pos.column + 1)
                    .err(ParseErrorKind::Syntax, format!("unknown section kind `{kind}`")));
            }
            out.push(RawSection { kind: kind.into(), name: name.into(), header: pos, lines: Vec::new() });
        } else {
            let section = out
                .last_mut()
                .ok_or_else(|| pos.err(ParseErrorKind::Syntax, "content before the first section header"))?;
            section.lines.push(Line { pos, text: trimmed.to_string() });
        }
    }
    Ok(out)
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(text: &str, base: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((base + s, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((base + s, &text[s..]));
    }
    out
}

/// Body of a section split into `key = value` pairs, labelled row blocks
/// and `param` lines.
/// A labelled block of `row` lines.
type Block = (String, Pos, Vec<(Pos, String)>);

#[derive(Default)]
struct Body {
    keys: Vec<(String, String, Pos)>,
    blocks: Vec<Block>,
    params: Vec<(Pos, String)>,
}

fn classify(section: &RawSection) -> Result<Body, ParseError> {
    let mut body = Body::default();
    for line in &section.lines {
        let t = line.text.as_str();
        if let Some(rest) = t.strip_prefix("row ") {
            let Some(block) = body.blocks.last_mut() else {
                return Err(line.pos.err(ParseErrorKind::Syntax, "`row` line outside a table block"));
            };
            let (idx, cells) =
                rest.split_once(':').ok_or_else(|| line.pos.err(ParseErrorKind::Syntax, "expected `row i: ...`"))?;
            let expected = block.2.len();
            if idx.trim().parse::<usize>().ok() != Some(expected) {
                return Err(line
                    .pos
                    .at(line.pos.column + 4)
                    .err(ParseErrorKind::Syntax, format!("expected row {expected}, found `{}`", idx.trim())));
            }
            let offset = line.pos.column + 4 + idx.len() + 1;
            block.2.push((line.pos.at(offset), cells.to_string()));
        } else if t.starts_with("param ") {
            body.params.push((line.pos.clone(), t.to_string()));
        } else if let Some(label) = t.strip_suffix(':') {
            if label.contains(char::is_whitespace) || label.is_empty() {
                return Err(line.pos.err(ParseErrorKind::Syntax, "malformed block label"));
            }
            body.blocks.push((label.to_string(), line.pos.clone(), Vec::new()));
        } else if let Some((k, v)) = t.split_once('=') {
            let key = k.trim().to_string();
            if body.keys.iter().any(|(existing, _, _)| *existing == key) {
                return Err(line.pos.err(ParseErrorKind::Syntax, format!("duplicate key `{key}`")));
            }
            let vcol = line.pos.column + t.find('=').unwrap() + 1 + (v.len() - v.trim_start().len());
            body.keys.push((key, v.trim().to_string(), line.pos.at(vcol)));
        } else {
            return Err(line.pos.err(ParseErrorKind::Syntax, format!("unrecognized line `{t}`")));
        }
    }
    Ok(body)
}

impl Body {
    fn key(&self, section: &RawSection, key: &str) -> Result<(&str, &Pos), ParseError> {
        self.keys
            .iter()
            .find(|(k, _, _)| k == key)
            .map(|(_, v, p)| (v.as_str(), p))
            .ok_or_else(|| section.header.err(ParseErrorKind::Syntax, format!("missing `{key} = ...`")))
    }

    fn elements(&self, section: &RawSection) -> Result<(usize, Pos), ParseError> {
        let (v, pos) = self.key(section, "elements")?;
        let n: usize = v
            .parse()
            .map_err(|_| pos.err(ParseErrorKind::Syntax, format!("`elements` must be a number, found `{v}`")))?;
        if n == 0 || n > MAX_ELEMENTS {
            return Err(pos.err(ParseErrorKind::Dimension, format!("`elements` must be in 1..={MAX_ELEMENTS}")));
        }
        Ok((n, pos.clone()))
    }

    fn block(&self, section: &RawSection, label: &str) -> Result<&[(Pos, String)], ParseError> {
        self.blocks
            .iter()
            .find(|(l, _, _)| l == label)
            .map(|(_, _, rows)| rows.as_slice())
            .ok_or_else(|| section.header.err(ParseErrorKind::Syntax, format!("missing `{label}:` table")))
    }

    fn check_known(
        &self,
        section: &RawSection,
        keys: &[&str],
        blocks: &[&str],
        params: bool,
    ) -> Result<(), ParseError> {
        if let Some((k, _, p)) = self.keys.iter().find(|(k, _, _)| !keys.contains(&k.as_str())) {
            return Err(p.err(ParseErrorKind::Syntax, format!("unexpected key `{k}` in {} section", section.kind)));
        }
        if let Some((l, p, _)) = self.blocks.iter().find(|(l, _, _)| !blocks.contains(&l.as_str())) {
            return Err(p.err(ParseErrorKind::Syntax, format!("unexpected table `{l}` in {} section", section.kind)));
        }
        if !params {
            if let Some((p, _)) = self.params.first() {
                return Err(p.err(
                    ParseErrorKind::Syntax,
                    format!("`param` lines are not allowed in {} sections", section.kind),
                ));
            }
        }
        Ok(())
    }
}

fn int_table(rows: &[(Pos, String)], n: usize, header: &Pos) -> Result<Vec<Vec<usize>>, ParseError> {
    if rows.len() != n {
        return Err(header.err(ParseErrorKind::Dimension, format!("expected {n} rows, found {}", rows.len())));
    }
    rows.iter()
        .map(|(pos, text)| {
            let toks = tokens(text, pos.column);
            if toks.len() != n {
                return Err(pos.err(ParseErrorKind::Dimension, format!("expected {n} entries, found {}", toks.len())));
            }
            toks.into_iter()
                .map(|(col, t)| {
                    let v: usize = t.parse().map_err(|_| {
                        pos.at(col).err(ParseErrorKind::Syntax, format!("expected element id, found `{t}`"))
                    })?;
                    if v >= n {
                        return Err(pos.at(col).err(ParseErrorKind::Dimension, format!("element {v} outside 0..{n}")));
                    }
                    Ok(v)
                })
                .collect()
        })
        .collect()
}

/// Parses `{0 2} {1} ...` into subsets.
fn braced_cells(pos: &Pos, text: &str, n: usize) -> Result<Vec<Subset>, ParseError> {
    let mut out = Vec::new();
    let mut rest = text;
    let mut col = pos.column;
    loop {
        let trimmed = rest.trim_start();
        col += rest.len() - trimmed.len();
        rest = trimmed;
        if rest.is_empty() {
            break;
        }
        if !rest.starts_with('{') {
            return Err(pos.at(col).err(ParseErrorKind::Syntax, "expected `{` to open a cell"));
        }
        let close =
            rest.find('}').ok_or_else(|| pos.at(col).err(ParseErrorKind::Syntax, "unterminated cell, expected `}`"))?;
        let mut cell = Subset::EMPTY;
        for (c, t) in tokens(&rest[1..close], col + 1) {
            let v: usize = t
                .parse()
                .map_err(|_| pos.at(c).err(ParseErrorKind::Syntax, format!("expected element id, found `{t}`")))?;
            if v >= n {
                return Err(pos.at(c).err(ParseErrorKind::Dimension, format!("element {v} outside 0..{n}")));
            }
            cell.insert(v);
        }
        if cell.is_empty() {
            return Err(pos.at(col).err(ParseErrorKind::Invalid, "hyperoperation cells must be nonempty"));
        }
        out.push(cell);
        col += close + 1;
        rest = &rest[close + 1..];
    }
    Ok(out)
}

fn degrees(pos: &Pos, text: &str, n: usize, negative: bool) -> Result<Vec<Rational>, ParseError> {
    let toks = tokens(text, pos.column);
    if toks.len() != n {
        return Err(pos.err(ParseErrorKind::Dimension, format!("expected {n} degrees, found {}", toks.len())));
    }
    toks.into_iter()
        .map(|(col, t)| {
            let r = Rational::parse(t)
                .map_err(|_| pos.at(col).err(ParseErrorKind::Syntax, format!("invalid degree `{t}`")))?;
            let ok = if negative { r.in_neg_unit() } else { r.in_unit() };
            if !ok {
                let range = if negative { "[-1, 0]" } else { "[0, 1]" };
                return Err(pos.at(col).err(ParseErrorKind::DegreeRange, format!("degree {t} outside {range}")));
            }
            Ok(r)
        })
        .collect()
}

fn parse_bfss(section: &RawSection, body: &Body) -> Result<BipolarFuzzySoftSet, ParseError> {
    body.check_known(section, &["elements"], &[], true)?;
    let (n, _) = body.elements(section)?;
    let mut set = BipolarFuzzySoftSet::empty(n);
    for (pos, text) in &body.params {
        let rest = &text["param ".len()..];
        let (name, values) = rest
            .split_once(':')
            .ok_or_else(|| pos.err(ParseErrorKind::Syntax, "expected `param NAME: pos = ... ; neg = ...`"))?;
        let name = name.trim();
        if name.is_empty() || name.contains(char::is_whitespace) {
            return Err(pos.err(ParseErrorKind::Syntax, "malformed parameter name"));
        }
        if set.contains(name) {
            return Err(pos.err(ParseErrorKind::Syntax, format!("duplicate parameter `{name}`")));
        }
        let values_col = pos.column + "param ".len() + rest.find(':').unwrap() + 1;
        let (pos_part, neg_part) = values
            .split_once(';')
            .ok_or_else(|| pos.at(values_col).err(ParseErrorKind::Syntax, "expected `;` between pos and neg"))?;
        let component = |part: &str, col: usize, key: &str| -> Result<(usize, String), ParseError> {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| pos.at(col).err(ParseErrorKind::Syntax, format!("expected `{key} = ...`")))?;
            if k.trim() != key {
                return Err(pos.at(col).err(ParseErrorKind::Syntax, format!("expected `{key}`, found `{}`", k.trim())));
            }
            Ok((col + part.find('=').unwrap() + 1, v.to_string()))
        };
        let (pc, pv) = component(pos_part, values_col, "pos")?;
        let (nc, nv) = component(neg_part, values_col + pos_part.len() + 1, "neg")?;
        let pos_vals = degrees(&pos.at(pc), &pv, n, false)?;
        let neg_vals = degrees(&pos.at(nc), &nv, n, true)?;
        let b = BipolarFuzzySet::new(pos_vals, neg_vals)
            .map_err(|e| pos.err(ParseErrorKind::DegreeRange, e.to_string()))?;
        set.insert(name, b).map_err(|e| pos.err(ParseErrorKind::Dimension, e.to_string()))?;
    }
    Ok(set)
}

// ---------------------------------------------------------------------------
// Resolution

fn resolve(raws: Vec<RawSection>) -> Result<Document, ParseError> {
    let mut seen: HashMap<&str, &Pos> = HashMap::new();
    for r in &raws {
        if seen.insert(&r.name, &r.header).is_some() {
            return Err(r.header.err(ParseErrorKind::Invalid, format!("duplicate section name `{}`", r.name)));
        }
    }
    let bodies: Vec<Body> = raws.iter().map(classify).collect::<Result<_, _>>()?;
    let invalid = |pos: &Pos, e: crate::Error| pos.err(ParseErrorKind::Invalid, e.to_string());

    let mut fields: BTreeMap<&str, FiniteField> = BTreeMap::new();
    let mut groups: BTreeMap<&str, AbelianGroup> = BTreeMap::new();
    for (r, body) in raws.iter().zip(&bodies) {
        match r.kind.as_str() {
            "field" => {
                body.check_known(r, &["elements"], &["add", "mul"], false)?;
                let (n, _) = body.elements(r)?;
                let add = int_table(body.block(r, "add")?, n, &r.header)?;
                let mul = int_table(body.block(r, "mul")?, n, &r.header)?;
                fields.insert(&r.name, FiniteField::from_rows(&add, &mul).map_err(|e| invalid(&r.header, e))?);
            }
            "group" => {
                body.check_known(r, &["elements"], &["add"], false)?;
                let (n, _) = body.elements(r)?;
                let add = int_table(body.block(r, "add")?, n, &r.header)?;
                groups.insert(&r.name, AbelianGroup::from_rows(&add).map_err(|e| invalid(&r.header, e))?);
            }
            _ => {}
        }
    }

    let mut spaces: BTreeMap<&str, HyperVectorSpace> = BTreeMap::new();
    for (r, body) in raws.iter().zip(&bodies) {
        if r.kind != "hvs" {
            continue;
        }
        body.check_known(r, &["field", "group", "elements"], &["hyperop"], false)?;
        let (fname, fpos) = body.key(r, "field")?;
        let (gname, gpos) = body.key(r, "group")?;
        let field = fields
            .get(fname)
            .ok_or_else(|| fpos.err(ParseErrorKind::DanglingReference, format!("no field section named `{fname}`")))?;
        let group = groups
            .get(gname)
            .ok_or_else(|| gpos.err(ParseErrorKind::DanglingReference, format!("no group section named `{gname}`")))?;
        let (n, npos) = body.elements(r)?;
        if n != group.order() {
            return Err(npos.err(ParseErrorKind::Dimension, format!("group `{gname}` has {} elements", group.order())));
        }
        let rows = body.block(r, "hyperop")?;
        if rows.len() != field.order() {
            return Err(r.header.err(
                ParseErrorKind::Dimension,
                format!("expected {} hyperop rows (one per scalar), found {}", field.order(), rows.len()),
            ));
        }
        let mut cells = Vec::new();
        for (pos, text) in rows {
            let row = braced_cells(pos, text, n)?;
            if row.len() != n {
                return Err(pos.err(ParseErrorKind::Dimension, format!("expected {n} cells, found {}", row.len())));
            }
            cells.push(row);
        }
        let space = HyperVectorSpace::new(field.clone(), group.clone(), cells).map_err(|e| invalid(&r.header, e))?;
        spaces.insert(&r.name, space);
    }

    let mut sections = Vec::with_capacity(raws.len());
    for (r, body) in raws.iter().zip(&bodies) {
        let name = r.name.clone();
        let section = match r.kind.as_str() {
            "field" => Section::Field { name, field: fields[r.name.as_str()].clone() },
            "group" => Section::Group { name, group: groups[r.name.as_str()].clone() },
            "hvs" => Section::Hvs {
                name,
                field: body.key(r, "field")?.0.to_string(),
                group: body.key(r, "group")?.0.to_string(),
                space: spaces[r.name.as_str()].clone(),
            },
            "bfss" => Section::Bfss { name, set: parse_bfss(r, body)? },
            "map" => {
                body.check_known(r, &["from", "to", "elements", "phi"], &[], true)?;
                let (from, from_pos) = body.key(r, "from")?;
                let (to, to_pos) = body.key(r, "to")?;
                let v = spaces.get(from).ok_or_else(|| {
                    from_pos.err(ParseErrorKind::DanglingReference, format!("no hvs section named `{from}`"))
                })?;
                let w = spaces.get(to).ok_or_else(|| {
                    to_pos.err(ParseErrorKind::DanglingReference, format!("no hvs section named `{to}`"))
                })?;
                let (n, npos) = body.elements(r)?;
                if n != v.dim() {
                    return Err(npos.err(ParseErrorKind::Dimension, format!("hvs `{from}` has {} elements", v.dim())));
                }
                let (phi_text, phi_pos) = body.key(r, "phi")?;
                let toks = tokens(phi_text, phi_pos.column);
                if toks.len() != n {
                    return Err(
                        phi_pos.err(ParseErrorKind::Dimension, format!("expected {n} images, found {}", toks.len()))
                    );
                }
                let phi = toks
                    .into_iter()
                    .map(|(col, t)| {
                        let y: usize = t.parse().map_err(|_| {
                            phi_pos.at(col).err(ParseErrorKind::Syntax, format!("expected element id, found `{t}`"))
                        })?;
                        if y >= w.dim() {
                            return Err(phi_pos
                                .at(col)
                                .err(ParseErrorKind::Dimension, format!("element {y} outside 0..{}", w.dim())));
                        }
                        Ok(y)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let mut params = BTreeMap::new();
                for (pos, text) in &body.params {
                    let rest = &text["param ".len()..];
                    let (e, u) = rest
                        .split_once("->")
                        .ok_or_else(|| pos.err(ParseErrorKind::Syntax, "expected `param e -> u`"))?;
                    let (e, u) = (e.trim(), u.trim());
                    if e.is_empty()
                        || u.is_empty()
                        || e.contains(char::is_whitespace)
                        || u.contains(char::is_whitespace)
                    {
                        return Err(pos.err(ParseErrorKind::Syntax, "malformed parameter mapping"));
                    }
                    if params.insert(e.to_string(), u.to_string()).is_some() {
                        return Err(pos.err(ParseErrorKind::Syntax, format!("parameter `{e}` mapped twice")));
                    }
                }
                let function = FuzzySoftFunction::new(phi, w.dim(), params).map_err(|e| invalid(&r.header, e))?;
                Section::Map { name, from: from.to_string(), to: to.to_string(), function }
            }
            _ => unreachable!("kinds filtered while splitting"),
        };
        sections.push(section);
    }
    Ok(Document { sections })
}

// ---------------------------------------------------------------------------
// Printing

fn write_rows(out: &mut String, label: &str, rows: &[Vec<String>]) {
    let _ = writeln!(out, "{label}:");
    for (i, row) in rows.iter().enumerate() {
        let _ = writeln!(out, "row {i}: {}", row.join(" "));
    }
}

fn table_strings(rows: Vec<Vec<usize>>) -> Vec<Vec<String>> {
    rows.into_iter().map(|r| r.into_iter().map(|v| v.to_string()).collect()).collect()
}

fn join_degrees(values: &[Rational]) -> String {
    values.iter().map(Rational::to_string).collect::<Vec<_>>().join(" ")
}

/// Canonical text for one soft set section body (without header).
fn write_bfss(out: &mut String, set: &BipolarFuzzySoftSet) {
    let _ = writeln!(out, "elements = {}", set.carrier());
    for (p, b) in set.iter() {
        let _ =
            writeln!(out, "param {p}: pos = {} ; neg = {}", join_degrees(b.pos_values()), join_degrees(b.neg_values()));
    }
}

pub fn print(doc: &Document) -> String {
    let mut out = String::new();
    for (i, s) in doc.sections.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "[{} {}]", s.kind(), s.name());
        match s {
            Section::Field { field, .. } => {
                let _ = writeln!(out, "elements = {}", field.order());
                write_rows(&mut out, "add", &table_strings(field.add_table().rows()));
                write_rows(&mut out, "mul", &table_strings(field.mul_table().rows()));
            }
            Section::Group { group, .. } => {
                let _ = writeln!(out, "elements = {}", group.order());
                write_rows(&mut out, "add", &table_strings(group.table().rows()));
            }
            Section::Hvs { field, group, space, .. } => {
                let _ = writeln!(out, "field = {field}");
                let _ = writeln!(out, "group = {group}");
                let _ = writeln!(out, "elements = {}", space.dim());
                let rows: Vec<Vec<String>> =
                    space.rows().into_iter().map(|r| r.into_iter().map(|c| c.to_string()).collect()).collect();
                write_rows(&mut out, "hyperop", &rows);
            }
            Section::Bfss { set, .. } => write_bfss(&mut out, set),
            Section::Map { from, to, function, .. } => {
                let _ = writeln!(out, "from = {from}");
                let _ = writeln!(out, "to = {to}");
                let _ = writeln!(out, "elements = {}", function.domain());
                let phi: Vec<String> = function.phi().iter().map(usize::to_string).collect();
                let _ = writeln!(out, "phi = {}", phi.join(" "));
                for (e, u) in function.param_map() {
                    let _ = writeln!(out, "param {e} -> {u}");
                }
            }
        }
    }
    out
}

/// Canonical text of a single soft set, as a one-section document.
pub fn print_bfss(name: &str, set: &BipolarFuzzySoftSet) -> String {
    let mut out = format!("[bfss {name}]\n");
    write_bfss(&mut out, set);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "\
[field K]
elements = 2
add:
row 0: 0 1
row 1: 1 0
mul:
row 0: 0 0
row 1: 0 1

[group G]
elements = 2
add:
row 0: 0 1
row 1: 1 0

[hvs V]
field = K
group = G
elements = 2
hyperop:
row 0: {0} {0}
row 1: {0} {1}
";

    #[test]
    fn small_round_trip() {
        let doc = parse(SMALL).unwrap();
        assert_eq!(print(&doc), SMALL);
        assert_eq!(doc.hvs("V").unwrap().cell(1, 1), Subset::singleton(1));
    }

    #[test]
    fn dangling_reference() {
        let text = SMALL.replace("group = G", "group = H");
        let err = parse(&text).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DanglingReference);
        assert_eq!(err.line, 18);
        assert_eq!(err.column, 9);
    }

    #[test]
    fn degree_out_of_range_points_at_literal() {
        let text = "[bfss F]\nelements = 2\nparam c: pos = 1.5 0 ; neg = 0 0\n";
        let err = parse(text).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DegreeRange);
        assert_eq!((err.line, err.column), (3, 16));
        let text = "[bfss F]\nelements = 2\nparam c: pos = 0 0 ; neg = 0 0.2\n";
        let err = parse(text).unwrap_err();
        assert_eq!((err.kind, err.line, err.column), (ParseErrorKind::DegreeRange, 3, 30));
    }

    #[test]
    fn empty_bfss_is_valid() {
        let doc = parse("[bfss E]\nelements = 4\n").unwrap();
        assert!(doc.bfss("E").unwrap().is_empty());
    }

    #[test]
    fn unsorted_parameters_print_sorted() {
        let text = "[bfss F]\nelements = 1\nparam z: pos = 0.5 ; neg = -0.5\nparam a: pos = 1 ; neg = 0\n";
        let printed = print(&parse(text).unwrap());
        assert_eq!(printed, "[bfss F]\nelements = 1\nparam a: pos = 1 ; neg = 0\nparam z: pos = 1/2 ; neg = -1/2\n");
    }

    #[test]
    fn syntax_errors() {
        for (text, kind) in [
            ("elements = 2\n", ParseErrorKind::Syntax),
            ("[blob X]\n", ParseErrorKind::Syntax),
            ("[group G]\nelements = 2\nadd:\nrow 0: 0 1\nrow 2: 1 0\n", ParseErrorKind::Syntax),
            ("[group G]\nelements = 2\nadd:\nrow 0: 0 1\nrow 1: 1\n", ParseErrorKind::Dimension),
            ("[group G]\nelements = 2\nadd:\nrow 0: 0 1\nrow 1: 1 5\n", ParseErrorKind::Dimension),
            ("[group G]\nelements = 2\nadd:\nrow 0: 0 1\nrow 1: 1 1\n", ParseErrorKind::Invalid),
            ("[bfss F]\nelements = 1\nparam c: pos = x ; neg = 0\n", ParseErrorKind::Syntax),
            ("[bfss F]\nelements = 1\nparam c: pos = 0 neg = 0\n", ParseErrorKind::Syntax),
            ("[bfss F]\nelements = 1\n[bfss F]\nelements = 1\n", ParseErrorKind::Invalid),
        ] {
            assert_eq!(parse(text).unwrap_err().kind, kind, "{text}");
        }
    }

    #[test]
    fn cross_source_references() {
        let (fg, rest) = SMALL.split_at(SMALL.find("[hvs").unwrap());
        let doc = parse_sources(&[("a.hvs", fg), ("b.hvs", rest)]).unwrap();
        assert!(doc.hvs("V").is_some());
        let err = parse_sources(&[("b.hvs", rest)]).unwrap_err();
        assert_eq!(err.source, "b.hvs");
        assert_eq!(err.kind, ParseErrorKind::DanglingReference);
    }

    #[test]
    fn comments_are_ignored() {
        let text = "# header\n[bfss F] # trailing\nelements = 1\nparam c: pos = 1 ; neg = -1 # note\n";
        assert_eq!(parse(text).unwrap().bfss("F").unwrap().len(), 1);
    }
}
