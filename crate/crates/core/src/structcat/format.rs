//! Text formats for categories, sesquicategories and premonoidal
//! categories. The latter two extend the category format with more items.

use crate::syntax::{Cursor, ParseError, Pos};

use super::category::{arrow, Arrow, FiniteCategory};
use super::premonoidal::PremonoidalData;
use super::sesqui::SesquiData;
use super::CatError;

/// Collects `object`, `arrow` and `comp` items.
#[derive(Default)]
pub(crate) struct CategoryItems {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    identities: Vec<usize>,
    composites: Vec<(usize, usize, usize)>,
}

impl CategoryItems {
    fn object(&self, name: &str, pos: Pos) -> Result<usize, ParseError> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| ParseError::new(pos, format!("unknown object `{name}`")))
    }

    pub(crate) fn arrow(&self, name: &str, pos: Pos) -> Result<usize, ParseError> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| ParseError::new(pos, format!("unknown arrow `{name}`")))
    }

    pub(crate) fn object_ref(&self, cur: &mut Cursor) -> Result<usize, ParseError> {
        let (name, pos) = cur.name()?;
        self.object(&name, pos)
    }

    pub(crate) fn arrow_ref(&self, cur: &mut Cursor) -> Result<usize, ParseError> {
        let (name, pos) = cur.ident()?;
        self.arrow(&name, pos)
    }

    /// Handles one item if its keyword is `object`, `arrow` or `comp`.
    pub(crate) fn item(&mut self, cur: &mut Cursor) -> Result<bool, ParseError> {
        if cur.is_keyword("object") {
            cur.expect_keyword("object")?;
            loop {
                let (name, pos) = cur.name()?;
                if self.objects.contains(&name) {
                    return Err(ParseError::new(pos, format!("object `{name}` declared twice")));
                }
                let id = format!("id_{name}");
                if self.arrows.iter().any(|a| a.name == id) {
                    return Err(ParseError::new(pos, format!("arrow `{id}` already declared")));
                }
                self.identities.push(self.arrows.len());
                self.arrows.push(arrow(&id, self.objects.len(), self.objects.len()));
                self.objects.push(name);
                if !cur.eat_punct(",") {
                    break;
                }
            }
        } else if cur.is_keyword("arrow") {
            cur.expect_keyword("arrow")?;
            let (name, pos) = cur.ident()?;
            if self.arrows.iter().any(|a| a.name == name) {
                return Err(ParseError::new(pos, format!("arrow `{name}` declared twice")));
            }
            cur.expect_punct(":")?;
            let src = self.object_ref(cur)?;
            cur.expect_punct("->")?;
            let tgt = self.object_ref(cur)?;
            self.arrows.push(arrow(&name, src, tgt));
        } else if cur.is_keyword("comp") {
            cur.expect_keyword("comp")?;
            let pos = cur.pos();
            let g = self.arrow_ref(cur)?;
            cur.expect_punct(".")?;
            let f = self.arrow_ref(cur)?;
            cur.expect_punct("=")?;
            let h = self.arrow_ref(cur)?;
            if self.arrows[g].src != self.arrows[f].tgt {
                return Err(ParseError::new(
                    pos,
                    format!("`{}` and `{}` are not composable", self.arrows[g].name, self.arrows[f].name),
                ));
            }
            self.composites.push((g, f, h));
        } else {
            return Ok(false);
        }
        Ok(true)
    }

    pub(crate) fn build(self, name: &str, pos: Pos) -> Result<FiniteCategory, ParseError> {
        FiniteCategory::new(name, self.objects, self.arrows, self.identities, &self.composites)
            .map_err(|e| ParseError::new(pos, e.to_string()))
    }
}

pub(crate) fn cat_error(pos: Pos) -> impl Fn(CatError) -> ParseError {
    move |e| ParseError::new(pos, e.to_string())
}

/// ```text
/// category NAME {
///   object a, b;
///   arrow f : a -> b;
///   comp g.f = h;
/// }
/// ```
/// Identities `id_a` are created with their objects; composites with
/// identities may be omitted, all other composable pairs must be listed.
pub fn parse_category(text: &str) -> Result<FiniteCategory, ParseError> {
    let mut cur = Cursor::new(text)?;
    let start = cur.pos();
    let name = cur.header("category")?;
    let mut items = CategoryItems::default();
    while !cur.eat_punct("}") {
        if !items.item(&mut cur)? {
            return Err(cur.error("expected `object`, `arrow`, `comp` or `}`"));
        }
        cur.expect_punct(";")?;
    }
    cur.finish()?;
    items.build(&name, start)
}

pub(crate) fn render_category_items(c: &FiniteCategory, out: &mut String) {
    if c.object_count() > 0 {
        out.push_str(&format!("  object {};\n", c.objects().join(", ")));
    }
    for (f, a) in c.arrows().iter().enumerate() {
        if !c.is_identity(f) {
            out.push_str(&format!("  arrow {} : {} -> {};\n", a.name, c.objects()[a.src], c.objects()[a.tgt]));
        }
    }
    for g in 0..c.arrow_count() {
        for f in 0..c.arrow_count() {
            if c.is_identity(g) || c.is_identity(f) {
                continue;
            }
            if let Some(h) = c.compose(g, f) {
                out.push_str(&format!("  comp {}.{} = {};\n", c.arrow_name(g), c.arrow_name(f), c.arrow_name(h)));
            }
        }
    }
}

pub fn render_category(c: &FiniteCategory) -> String {
    let mut out = format!("category {} {{\n", c.name);
    render_category_items(c, &mut out);
    out.push_str("}\n");
    out
}

/// Category items, then
/// ```text
///   cell alpha : f => g;
///   idcell f = one_f;
///   whiskL h.alpha = h_alpha;
///   whiskR alpha.k = alpha_k;
///   vcomp beta.alpha = gamma;
/// ```
/// Identity 2-cells not named by `idcell` are created as `id2_f`. Entries
/// involving identity arrows or identity 2-cells may be omitted and then
/// take their unit values.
pub fn parse_sesqui(text: &str) -> Result<SesquiData, ParseError> {
    let mut cur = Cursor::new(text)?;
    let start = cur.pos();
    let name = cur.header("sesqui")?;
    let mut items = CategoryItems::default();
    let mut cells: Vec<(String, usize, usize, Pos)> = Vec::new();
    let mut idcells: Vec<(usize, String, Pos)> = Vec::new();
    let mut left: Vec<(usize, String, String, Pos)> = Vec::new();
    let mut right: Vec<(String, usize, String, Pos)> = Vec::new();
    let mut vert: Vec<(String, String, String, Pos)> = Vec::new();
    while !cur.eat_punct("}") {
        let pos = cur.pos();
        if items.item(&mut cur)? {
        } else if cur.is_keyword("cell") {
            cur.expect_keyword("cell")?;
            let (name, npos) = cur.ident()?;
            if cells.iter().any(|c| c.0 == name) {
                return Err(ParseError::new(npos, format!("cell `{name}` declared twice")));
            }
            cur.expect_punct(":")?;
            let f = items.arrow_ref(&mut cur)?;
            cur.expect_punct("=>")?;
            let g = items.arrow_ref(&mut cur)?;
            cells.push((name, f, g, pos));
        } else if cur.is_keyword("idcell") {
            cur.expect_keyword("idcell")?;
            let f = items.arrow_ref(&mut cur)?;
            cur.expect_punct("=")?;
            idcells.push((f, cur.ident()?.0, pos));
        } else if cur.is_keyword("whiskL") {
            cur.expect_keyword("whiskL")?;
            let h = items.arrow_ref(&mut cur)?;
            cur.expect_punct(".")?;
            let a = cur.ident()?.0;
            cur.expect_punct("=")?;
            left.push((h, a, cur.ident()?.0, pos));
        } else if cur.is_keyword("whiskR") {
            cur.expect_keyword("whiskR")?;
            let a = cur.ident()?.0;
            cur.expect_punct(".")?;
            let k = items.arrow_ref(&mut cur)?;
            cur.expect_punct("=")?;
            right.push((a, k, cur.ident()?.0, pos));
        } else if cur.is_keyword("vcomp") {
            cur.expect_keyword("vcomp")?;
            let b = cur.ident()?.0;
            cur.expect_punct(".")?;
            let a = cur.ident()?.0;
            cur.expect_punct("=")?;
            vert.push((b, a, cur.ident()?.0, pos));
        } else {
            return Err(cur.error("expected a category item, `cell`, `idcell`, `whiskL`, `whiskR`, `vcomp` or `}`"));
        }
        cur.expect_punct(";")?;
    }
    cur.finish()?;
    let base = items.build(&name, start)?;
    let mut s = SesquiData::new(name, base);
    for (n, f, g, pos) in cells {
        s.add_cell(&n, f, g).map_err(cat_error(pos))?;
    }
    for (f, n, pos) in idcells {
        let c = s.find_cell(&n).ok_or_else(|| ParseError::new(pos, format!("unknown cell `{n}`")))?;
        s.set_identity_cell(f, c).map_err(cat_error(pos))?;
    }
    s.complete_identity_cells();
    let cell = |s: &SesquiData, n: &str, pos: Pos| {
        s.find_cell(n).ok_or_else(|| ParseError::new(pos, format!("unknown cell `{n}`")))
    };
    for (h, a, r, pos) in left {
        let (a, r) = (cell(&s, &a, pos)?, cell(&s, &r, pos)?);
        s.set_whisker_left(h, a, r).map_err(cat_error(pos))?;
    }
    for (a, k, r, pos) in right {
        let (a, r) = (cell(&s, &a, pos)?, cell(&s, &r, pos)?);
        s.set_whisker_right(a, k, r).map_err(cat_error(pos))?;
    }
    for (b, a, r, pos) in vert {
        let (b, a, r) = (cell(&s, &b, pos)?, cell(&s, &a, pos)?, cell(&s, &r, pos)?);
        s.set_vertical(b, a, r).map_err(cat_error(pos))?;
    }
    s.complete_units();
    Ok(s)
}

pub fn render_sesqui(s: &SesquiData) -> String {
    let c = s.base();
    let mut out = format!("sesqui {} {{\n", s.name);
    render_category_items(c, &mut out);
    for cell in s.cells() {
        out.push_str(&format!("  cell {} : {} => {};\n", cell.name, c.arrow_name(cell.src), c.arrow_name(cell.tgt)));
    }
    for f in 0..c.arrow_count() {
        out.push_str(&format!("  idcell {} = {};\n", c.arrow_name(f), s.cell_name(s.identity_cell(f))));
    }
    for ((h, a), r) in s.whisker_left_entries() {
        out.push_str(&format!("  whiskL {}.{} = {};\n", c.arrow_name(h), s.cell_name(a), s.cell_name(r)));
    }
    for ((a, k), r) in s.whisker_right_entries() {
        out.push_str(&format!("  whiskR {}.{} = {};\n", s.cell_name(a), c.arrow_name(k), s.cell_name(r)));
    }
    for ((b, a), r) in s.vertical_entries() {
        out.push_str(&format!("  vcomp {}.{} = {};\n", s.cell_name(b), s.cell_name(a), s.cell_name(r)));
    }
    out.push_str("}\n");
    out
}

/// Category items, then
/// ```text
///   unit i;
///   tensor a * b = c;
///   left a * f = g;
///   right f * b = g;
///   lambda a = f;
///   rho a = f;
///   assoc [a, b, c] = f;
/// ```
/// `left a * f` is `a ⊗ f` and `right f * b` is `f ⊗ b`. Entries on
/// identity arrows take identity values when omitted; omitted constraints
/// are identities, which requires the two sides to be the same object.
pub fn parse_premonoidal(text: &str) -> Result<PremonoidalData, ParseError> {
    let mut cur = Cursor::new(text)?;
    let start = cur.pos();
    let name = cur.header("premonoidal")?;
    let mut items = CategoryItems::default();
    let mut unit = None;
    let mut tensor = Vec::new();
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut lambda = Vec::new();
    let mut rho = Vec::new();
    let mut assoc = Vec::new();
    while !cur.eat_punct("}") {
        let pos = cur.pos();
        if items.item(&mut cur)? {
        } else if cur.is_keyword("unit") {
            cur.expect_keyword("unit")?;
            unit = Some(items.object_ref(&mut cur)?);
        } else if cur.is_keyword("tensor") {
            cur.expect_keyword("tensor")?;
            let a = items.object_ref(&mut cur)?;
            cur.expect_punct("*")?;
            let b = items.object_ref(&mut cur)?;
            cur.expect_punct("=")?;
            tensor.push((a, b, items.object_ref(&mut cur)?, pos));
        } else if cur.is_keyword("left") {
            cur.expect_keyword("left")?;
            let a = items.object_ref(&mut cur)?;
            cur.expect_punct("*")?;
            let f = items.arrow_ref(&mut cur)?;
            cur.expect_punct("=")?;
            left.push((a, f, items.arrow_ref(&mut cur)?, pos));
        } else if cur.is_keyword("right") {
            cur.expect_keyword("right")?;
            let f = items.arrow_ref(&mut cur)?;
            cur.expect_punct("*")?;
            let b = items.object_ref(&mut cur)?;
            cur.expect_punct("=")?;
            right.push((b, f, items.arrow_ref(&mut cur)?, pos));
        } else if cur.is_keyword("lambda") || cur.is_keyword("rho") {
            let is_lambda = cur.is_keyword("lambda");
            cur.ident()?;
            let a = items.object_ref(&mut cur)?;
            cur.expect_punct("=")?;
            let f = items.arrow_ref(&mut cur)?;
            if is_lambda { &mut lambda } else { &mut rho }.push((a, f, pos));
        } else if cur.is_keyword("assoc") {
            cur.expect_keyword("assoc")?;
            cur.expect_punct("[")?;
            let a = items.object_ref(&mut cur)?;
            cur.expect_punct(",")?;
            let b = items.object_ref(&mut cur)?;
            cur.expect_punct(",")?;
            let c = items.object_ref(&mut cur)?;
            cur.expect_punct("]")?;
            cur.expect_punct("=")?;
            assoc.push((a, b, c, items.arrow_ref(&mut cur)?, pos));
        } else {
            return Err(cur.error(
                "expected a category item, `unit`, `tensor`, `left`, `right`, `lambda`, `rho`, `assoc` or `}`",
            ));
        }
        cur.expect_punct(";")?;
    }
    let end = cur.pos();
    cur.finish()?;
    let base = items.build(&name, start)?;
    let unit = unit.ok_or_else(|| ParseError::new(end, "missing `unit`"))?;
    let k = base.object_count();
    let mut table = vec![None; k * k];
    for (a, b, c, pos) in tensor {
        if table[a * k + b].replace(c).is_some_and(|old| old != c) {
            return Err(ParseError::new(pos, "tensor of two objects given twice"));
        }
    }
    let table: Vec<usize> = table
        .into_iter()
        .enumerate()
        .map(|(i, t)| {
            t.ok_or_else(|| {
                ParseError::new(end, format!("missing `tensor {} * {}`", base.objects()[i / k], base.objects()[i % k]))
            })
        })
        .collect::<Result<_, _>>()?;
    let mut p = PremonoidalData::new(name, base, unit, table).map_err(cat_error(start))?;
    for (a, f, g, pos) in left {
        p.set_left(a, f, g).map_err(cat_error(pos))?;
    }
    for (b, f, g, pos) in right {
        p.set_right(b, f, g).map_err(cat_error(pos))?;
    }
    for (a, f, pos) in lambda {
        p.set_lambda(a, f).map_err(cat_error(pos))?;
    }
    for (a, f, pos) in rho {
        p.set_rho(a, f).map_err(cat_error(pos))?;
    }
    for (a, b, c, f, pos) in assoc {
        p.set_assoc(a, b, c, f).map_err(cat_error(pos))?;
    }
    p.complete().map_err(cat_error(end))?;
    Ok(p)
}

pub fn render_premonoidal(p: &PremonoidalData) -> String {
    let c = p.base();
    let obj = |a: usize| c.objects()[a].as_str();
    let mut out = format!("premonoidal {} {{\n", p.name);
    render_category_items(c, &mut out);
    out.push_str(&format!("  unit {};\n", obj(p.unit())));
    let k = c.object_count();
    for a in 0..k {
        for b in 0..k {
            out.push_str(&format!("  tensor {} * {} = {};\n", obj(a), obj(b), obj(p.tensor_objects(a, b))));
        }
    }
    for a in 0..k {
        for f in 0..c.arrow_count() {
            if !c.is_identity(f) {
                out.push_str(&format!("  left {} * {} = {};\n", obj(a), c.arrow_name(f), c.arrow_name(p.left(a, f))));
            }
        }
    }
    for b in 0..k {
        for f in 0..c.arrow_count() {
            if !c.is_identity(f) {
                out.push_str(&format!("  right {} * {} = {};\n", c.arrow_name(f), obj(b), c.arrow_name(p.right(f, b))));
            }
        }
    }
    for a in 0..k {
        out.push_str(&format!("  lambda {} = {};\n", obj(a), c.arrow_name(p.lambda(a))));
        out.push_str(&format!("  rho {} = {};\n", obj(a), c.arrow_name(p.rho(a))));
    }
    for a in 0..k {
        for b in 0..k {
            for d in 0..k {
                out.push_str(&format!(
                    "  assoc [{}, {}, {}] = {};\n",
                    obj(a),
                    obj(b),
                    obj(d),
                    c.arrow_name(p.assoc(a, b, d))
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}
