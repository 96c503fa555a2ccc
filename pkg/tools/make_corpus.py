"""Generate the bundled English morphology lexicon.

Words are composed from a hand-curated inventory of stems, each listing the
derivations it actually takes. Spelling changes (e-deletion, y->i, consonant
doubling, -es plurals) are applied to the surface and the surface is segmented
as-is, so ``ability`` becomes ``abil/1 ity/2`` and ``carries`` ``carri/s es/i``.

Usage: python tools/make_corpus.py > src/mblmorph/data/english.lex
"""
import sys

VOWELS = set("aeiou")

# name -> (surface, tag, resulting category)
SUFFIXES = {
    "er": ("er", "1", "N"), "ee": ("ee", "2", "N"), "ness": ("ness", "1", "M"),
    "ment": ("ment", "1", "N"), "ful": ("ful", "1", "A0"), "less": ("less", "1", "A0"),
    "ly": ("ly", "1", "X"), "ish": ("ish", "1", "A0"), "y": ("y", "1", "A"),
    "hood": ("hood", "1", "N"), "ship": ("ship", "1", "N"), "able": ("able", "1", "A0"),
    "dom": ("dom", "1", "N"), "ism": ("ism", "1", "N"), "ist": ("ist", "1", "N"),
    "ize": ("ize", "1", "V"), "en": ("en", "1", "V"), "al": ("al", "1", "A0"),
    "ity": ("ity", "2", "N"), "ic": ("ic", "2", "A0"), "ion": ("ion", "2", "N"),
    "ation": ("ation", "2", "N"), "ous": ("ous", "2", "A0"), "ive": ("ive", "2", "A0"),
    "ify": ("ify", "2", "V"), "ian": ("ian", "2", "N"), "ance": ("ance", "2", "M"),
    "ence": ("ence", "2", "M"), "ant": ("ant", "2", "A0"), "ent": ("ent", "2", "A0"),
    "ure": ("ure", "2", "N"), "ory": ("ory", "2", "A0"), "age": ("age", "1", "N"),
    "ery": ("ery", "1", "N"), "ary": ("ary", "2", "A0"), "some": ("some", "1", "A0"),
    "ward": ("ward", "1", "X"), "let": ("let", "1", "N"), "ling": ("ling", "1", "N"),
    "ative": ("ative", "2", "A0"), "or": ("or", "1", "N"), "ible": ("ible", "1", "A0"),
    "ture": ("ture", "2", "N"), "ature": ("ature", "2", "N"), "ial": ("ial", "2", "A0"),
    "iar": ("iar", "2", "A0"), "ious": ("ious", "2", "A0"), "th": ("th", "1", "M"),
    "ty": ("ty", "1", "N"), "ster": ("ster", "1", "N"), "ry": ("ry", "1", "N"),
    "tic": ("tic", "2", "A0"), "tist": ("tist", "1", "N"), "tize": ("tize", "1", "V"),
    "ine": ("ine", "2", "N"), "ier": ("ier", "1", "N"), "ate": ("ate", "2", "V"),
    "eer": ("eer", "2", "N"),
}
PREFIXES = {
    "un": "1", "re": "1", "dis": "1", "mis": "1", "non": "1", "pre": "1", "over": "1",
    "out": "1", "under": "1", "anti": "1", "de": "1", "sub": "1", "inter": "1",
    "in": "2", "im": "2", "il": "2", "ir": "2", "ab": "1", "co": "1", "en": "1",
    "fore": "1", "counter": "1", "semi": "1", "super": "1", "trans": "2", "con": "2", "em": "1",
}

# stem:category derivations...
# categories: V verb, N noun, A adjective (comparable when marked ~), M mass noun.
# '*' after a stem doubles its last consonant before vowel-initial suffixes.
# A derivation is [prefix+]...[.suffix.suffix]; '=' alone means the bare stem
# with prefixes only, e.g. 're+=' is re+stem.
INVENTORY = """
help:V er ful less ful.ness ful.ly less.ness less.ly un+ful
play:V er ful ful.ly ful.ness re+= out+= over+= play.er
work:V er able re+= over+= under+= un+able
teach:V er able un+able re+=
read:V er able un+able re+= mis+= over+=
write:V er re+= over+= under+=
talk:V er ative
walk:V er out+=
jump:V er y
kill:V er
build:V er re+= over+=
count:V er able less un+able re+= mis+= dis+= counter+=
form:V er al al.ly al.ity ation ation.al ative re+= de+= trans+= in+= con+= in+ation
govern:V ment ment.al or un+able
employ:V er ee ment able un+ment un+able re+=
agree:V ment able able.ness dis+= dis+ment dis+able dis+able.ness
enjoy:V ment able
pay:V ment able ee re+= over+= under+= re+ment pre+=
move:V ment able er re+= un+able
treat:V ment able mis+= re+= mis+ment
judge:V ment re+= mis+= pre+=
amuse:V ment
argue:V ment ment.ative
state:V ment re+= over+= under+= mis+=
settle:V ment er re+= un+=
like:V able ly ness dis+= un+ly un+able
love:V able ly er less un+ly un+able
use:V er ful less able ful.ness less.ness ful.ly re+= mis+= dis+= over+= ab+= re+able
care:V ful less ful.ly less.ly less.ness ful.ness
hope:V ful less ful.ly less.ly less.ness un+ful
harm:V ful less ful.ly less.ly un+ed
rest:V ful less less.ness ful.ness re+= un+=
thank:V ful less ful.ly ful.ness less.ness
fear:V ful less ful.ly less.ly some less.ness
stop*:V er age un+able non+=
plan*:V er un+ed
drop*:V let
rob*:V er ery
shop*:V er
run*:V er out+= over+= under+= re+=
win*:V er
swim*:V er
begin*:V er
dig*:V er
hug*:V
knit*:V er
carry:V er age over+= mis+=
marry:V age re+= inter+= un+ed
hurry:V
worry:V some
bury:V
study:V ous re+=
copy:V er ist
apply:V
rely:V able un+able
deny:V
reply:V
defy:V ance
act:V or ive ion ive.ity ion.able re+= inter+= counter+= over+= in+ive re+ion
create:V ive ion ive.ity or re+= re+ion un+ed pre+=
educate:V ion ion.al or re+=
operate:V ion ive or ion.al co+= co+ive co+ion
relate:V ion ion.ship ive ive.ly ive.ity inter+= co+=
locate:V ion re+= dis+= al.ly
translate:V ion or able re+= mis+= un+able
separate:V ion ist ism
direct:V ion or ive ly ness mis+= re+= in+ly in+ion
collect:V ion ive or ive.ly re+= re+ion
protect:V ion or ive ion.ism un+ed over+=
connect:V ion ive or dis+= dis+ion inter+= re+=
correct:V ion ive ly ness in+= in+ly in+ness
express:V ion ive ive.ness ion.ism ion.ist ive.ly in+ible
impress:V ion ive ive.ly ion.ism ion.ist un+ive
suggest:V ion ive ive.ly
digest:V ion ive ible in+ion
invent:V ion ive or ive.ness re+=
prevent:V ion ive able
adopt:V ion ive er
construct:V ion ive or re+= de+= re+ion de+ion
instruct:V ion ive or
adapt:V ion ive able er ation
inform:V ation ative ant er mis+= dis+ation
transform:V ation er able
consult:V ation ant ative
confirm:V ation dis+=
accept:V ance able un+able
attend:V ance ant ee
perform:V ance er non+ance under+=
appear:V ance dis+= dis+ance re+=
avoid:V ance able un+able
annoy:V ance
allow:V ance dis+= dis+ance
differ:V ence ent ent.ly ent.ial in+ent in+ence
exist:V ence ent in+ent co+= non+ence
depend:V ence ent able ent.ly in+ence in+ent in+ent.ly inter+ence
insist:V ence ent
persist:V ence ent
confer:V ence ee
prefer:V ence able
refer:V ence ee al
press:V ure ing op+= com+= de+= re+= sup+=
fail:V ure
seize:V ure
mix:V ture er re+=
fix:V ture er able ate pre+= suf+= un+ed
please:V ure ant dis+= dis+ure un+ant
sign:V al al.ly ature ee er re+= de+= con+= as+=
deliver:V ance ery er re+=
discover:V er y re+=
bake:V er ery
brew:V er ery
brave:A~ ly ness ery
slave:N ery ish ish.ly
bribe:V ery
green:A~ ly ness ery ish
cook:V er ery book
bear:V able er un+able fore+=
break:V able age er out+= un+able
drain:V age
store:V age re+=
wreck:V age
pack:V age er re+= un+=
link:V age re+=
bond:N age
marry:V
poor:A~ ly ness
rich:A~ ly ness
dark:A~ ly ness en
bright:A~ ly ness en
sharp:A~ ly ness en
soft:A~ ly ness en ish
hard:A~ ly ness en ship
weak:A~ ly ness en ling
sweet:A~ ly ness en ish
short:A~ ly ness en age fall
deep:A~ ly ness en
wide:A~ ly ness en
light:A~ ly ness en some
black:A~ ly ness en ish
white:A~ ly ness en ish
red*:A~ ly ness dish
sad*:A~ ly ness
mad*:A~ ly ness
fat*:A~ ly ness y
thick:A~ ly ness en
fresh:A~ ly ness en er man
quick:A~ ly ness en
kind:A~ ly ness un+= un+ly un+ness
clear:A~ ly ness ance un+=
clean:A~ ly ness er un+=
fair:A~ ly ness un+= un+ly un+ness
true:A~ un+=
wise:A~ ly dom un+= un+ly
free:A~ ly dom
bore:V dom
king:N dom ly ship less let
star:N dom less let ry y
earl:N dom
duke:N dom
friend:N ly ship less ly.ness un+ly un+ly.ness
child:N hood ish less ish.ly ish.ness less.ness
mother:N hood ly less
father:N hood ly less land
brother:N hood ly
sister:N hood ly
neighbour:N hood ly
man:N hood ly ish kind ly.ness un+ly super+=
woman:N hood ly ish kind
false:A~ hood ly ness ify
leader:N ship less
owner:N ship
member:N ship
partner:N ship
citizen:N ship
champion:N ship
scholar:N ship ly
hard:A~
court:N ship ly ier
war:N like ship fare
power:N ful less ful.ly less.ness ful.ness em+= over+=
pain:N ful less ful.ly less.ly
joy:N ful less ful.ly ous
grace:N ful less ful.ly ious dis+= dis+ful
taste:N ful less ful.ly y dis+=
waste:N ful ful.ly
skill:N ful ful.ly un+ed
cheer:N ful less ful.ly ful.ness y
faith:N ful less ful.ly ful.ness un+ful
truth:N ful ful.ly ful.ness un+=
shame:N ful less ful.ly less.ly
home:N less less.ness ly y
end:N less less.ly less.ness
age:N less ism ist
price:N less y
word:N less y
tooth:N less y
rain:N y bow fall coat
wind:N y ward fall mill
sun*:N y shine rise set burn
snow:N y fall ball flake
salt:N y
sand:N y
dust:N y er
dirt:N y
cloud:N y less burst
storm:N y
smoke:N y less
bone:N y less
ice:N y berg
fruit:N y ful less ful.ness
milk:N y man
grass:N y land hopper
stone:N y wall mason
rock:N y
wood:N y en land cutter
gold:N en smith
silk:N en y
wool:N en
lead:N en er ship
hero:N ic ism ine
poet:N ic ry ic.al
drama:N tic tist tize
idiot:N ic
atom:N ic ize
angel:N ic ic.al
metal:N ic ic.ity
base:N ic ic.al.ly ment less
rhythm:N ic ic.al
economy:N ist ize
history:N
artist:N ic ic.al ry
danger:N ous ous.ly
poison:N ous ous.ly er
fame:N ous ous.ly in+ous
glamour:N ous
humour:N ous ist less
mountain:N ous eer
riot:N ous er
nerve:N ous ous.ness ous.ly
courage:N ous dis+= en+=
nature:N al al.ly al.ist al.ism al.ize super+al un+al
culture:N al al.ly multi+al
music:N al al.ly ian al.ity
magic:N al al.ly ian
politic:N al al.ly ian
logic:N al al.ly ian il+al
tradition:N al al.ly al.ism al.ist
person:N al al.ly al.ity al.ize im+al
emotion:N al al.ly un+al
option:N al
nation:N al al.ly al.ity al.ism al.ist al.ize inter+al
origin:N al al.ly al.ity
form:N al al.ly al.ity in+al
norm:N al al.ly al.ity al.ize ab+al ab+al.ity ab+al.ly sub+al
fatal:A ism ist ity ly
total:A ly ity ize
moral:A ist ity ize ly im+ity im+= a+=
mortal:A ity ly im+= im+ity
legal:A ly ity ize il+= il+ity il+ly
real:A ly ist ism ity ize un+= sur+=
equal:A ly ity ize un+= in+ity
vital:A ly ity ize
formal:A ly ity ize in+= in+ity in+ly
local:A ly ity ize
neutral:A ly ity ize
regular:A ly ity ize ir+= ir+ity ir+ly
similar:A ly ity dis+= dis+ity
popular:A ly ity ize un+= un+ity
famil:A iar iar.ity iar.ize un+iar
possible:A im+=
able:A dis+= un+= en+=
active:A ly ity ism ist in+= in+ity re+=
pure:A~ ly ness ity ist ism ify im+= im+ity
obscure:A ity ly
secure:A ity ly in+= in+ity
mature:A ity ly im+= im+ity
curious:A ly ity
serene:A ity ly
sane:A~ ity ly in+= in+ity
human:A ity ist ism ize ly in+= in+ity super+=
public:A ity ly ist ize
electric:A al ity ian al.ly
elastic:A ity
toxic:A ity
complex:A ity ly
stupid:A ity ly
humid:A ity ify
solid:A ity ify ly
valid:A ity ly ate in+= in+ate in+ity
rapid:A ity ly
timid:A ity ly
calm:A~ ly ness
great:A~ ly ness
strong:A~ ly hold
young:A~ ish ster
old:A~ ish
small:A~ ish ness
tall:A~ ish ness
long:A~ ish
cold:A~ ly ness ish
warm:A~ ly ness th ish
slow:A~ ly ness
loud:A~ ly ness
proud:A~ ly
rough:A~ ly ness en
tough:A~ ly ness en
smooth:A~ ly ness
safe:A~ ly ty un+=
rude:A~ ly ness
wild:A~ ly ness
neat:A~ ly ness
dull:A~ ly ness
happy:A~ ly ness un+= un+ly un+ness
busy:A~ ly ness
easy:A~ ly un+= un+ly
heavy:A~ ly ness
lucky:A~ ly un+= un+ly
angry:A~ ly
pretty:A~ ly ness
tidy:A~ ly ness un+=
silly:A~ ness
ready:A~ ly ness
steady:A~ ly ness un+=
early:A~
holy:A~ ness un+=
book:N let ish case shop keeper worm
bird:N let cage song
pig*:N let y
leaf:N let y less
rivet:N er ing
duck:N ling
found:V ling er ation
dark:A ling
under:P ling
horse:N whip man power back shoe
foot:N ball step print path note hold
hand:N ful book shake writing made bag some
head:N ache line light quarter strong master ship
fire:N place work man wood fly arm proof side
water:N fall proof melon mark front way
sea:N side shore weed gull shell food
house:N hold wife work keeper boat
life:N boat time like long guard style less
air:N port line craft plane ship field
land:N lord mark slide scape fall owner
day:N light time break dream
night:N fall mare time gown club
moon:N light beam shine walk
tea:N pot cup spoon time
door:N step bell way knob keeper man
bed:N room time side spread rock
school:N boy girl house master room mate
town:N ship hall house folk
post:N man mark card office
mail:N man box bag
rail:N way road
card:N board
black:A bird board smith mail out
blue:A bird berry print bell
up:P land hold set stairs keep start
out:P line look put come side
down:P fall hill stairs town pour
back:N ground bone yard ward fire
over:P coat look time flow
with:P hold draw stand out
"""

INFL = {
    "V": ["s", "ed", "ing"],
    "N": ["s"],
    "A~": ["er", "est"],
}
CAT_OF = {}  # computed per derived form


def ends_cy(s):
    return len(s) >= 2 and s[-1] == "y" and s[-2] not in VOWELS


def join(segs, suffix_surface):
    """Attach a suffix, returning new segments with spelling changes applied
    to the preceding segment."""
    prev_text, prev_tag, doubles = segs[-1]
    text = prev_text
    suf = suffix_surface
    v_initial = suf[0] in VOWELS or suf[0] == "y"
    if doubles and v_initial:
        text = text + text[-1]
    elif text.endswith("e") and not text.endswith("ee") and v_initial and len(text) > 2:
        text = text[:-1]
    elif text.endswith("ee") and suf[0] == "e":
        text = text[:-1]
    elif ends_cy(text) and not suf.startswith("i"):
        text = text[:-1] + "i"
        if suf == "s":
            suf = "es"
    elif text == "able" and suf in ("ity", "ize"):
        text = "abil"
    elif text.endswith(("s", "x", "z", "ch", "sh")) and suf == "s":
        suf = "es"
    return segs[:-1] + [(text, prev_tag, False)], suf


def parse_stem(tok):
    name, cat = tok.split(":")
    doubles = name.endswith("*")
    return name.rstrip("*"), cat, doubles


def derive(stem, cat, doubles, spec):
    prefixes = []
    if "+" in spec:
        *prefixes, spec = spec.split("+")
    segs = [(stem, "s", doubles)]
    out_cat = cat
    if spec and spec != "=":
        for name in spec.split("."):
            if name in SUFFIXES:
                surface, tag, res = SUFFIXES[name]
                segs, surface = join(segs, surface)
                segs.append((surface, tag, False))
                out_cat = res
            else:
                # a second stem: compound
                segs.append((name, "s", False))
                out_cat = "N"
    segs = [(p, PREFIXES[p], False) for p in prefixes] + segs
    return segs, out_cat


def inflect(segs, cat):
    key = "A~" if cat == "A~" else cat
    forms = []
    for suf in INFL.get(key, []):
        new, surface = join(segs, suf)
        forms.append(new + [(surface, "i", False)])
    return forms


def render(segs):
    surface = "".join(t for t, _, _ in segs)
    return surface, surface + "\t" + " ".join(f"{t}/{g}" for t, g, _ in segs)


def generate():
    seen = {}
    for line in INVENTORY.strip().splitlines():
        toks = line.split()
        stem, cat, doubles = parse_stem(toks[0])
        specs = ["="] + toks[1:]
        for spec in specs:
            # unknown affix names are treated as compound stems
            prefixes = spec.split("+")[:-1]
            if any(p not in PREFIXES for p in prefixes):
                continue
            segs, out_cat = derive(stem, cat, doubles, spec)
            if spec == "=" or spec.endswith("+="):
                out_cat = cat
            forms = [segs] + inflect(segs, out_cat)
            for f in forms:
                surface, rendered = render(f)
                seen.setdefault(surface, rendered)
    return [seen[k] for k in sorted(seen)]


if __name__ == "__main__":
    lines = generate()
    sys.stdout.write("# English morphological lexicon, generated by tools/make_corpus.py\n")
    sys.stdout.write("# surface<TAB>segment/tag ...; tags: s stem, 1 stress-neutral affix,\n")
    sys.stdout.write("# 2 stress-affecting affix, i inflection\n")
    for line in lines:
        sys.stdout.write(line + "\n")
    print(f"{len(lines)} words", file=sys.stderr)
