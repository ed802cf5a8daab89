"""Closed lexicon for the bundled desk corpus.

Word lists are expanded by tag_fixture.py into (form, lemma, upos)
readings. The novellas are written inside this vocabulary; the checker
reports anything outside it. Conventions follow UD English (EWT):
possessive pronouns are PRON, the copula is AUX, verbal particles ADP,
"not" is PART, wh-adverbs are ADV.
"""

# form: (lemma, upos) for closed-class words; order matters where a form
# appears again below (first listing is the default reading).
CLOSED = {
    "the": ("the", "DET"), "a": ("a", "DET"), "an": ("a", "DET"),
    "this": ("this", "DET"), "these": ("these", "DET"), "those": ("those", "DET"),
    "some": ("some", "DET"), "any": ("any", "DET"), "no": ("no", "DET"),
    "every": ("every", "DET"), "each": ("each", "DET"), "another": ("another", "DET"),
    "both": ("both", "DET"), "all": ("all", "DET"), "either": ("either", "DET"),
    "neither": ("neither", "DET"),

    "he": ("he", "PRON"), "she": ("she", "PRON"), "it": ("it", "PRON"),
    "they": ("they", "PRON"), "him": ("he", "PRON"), "them": ("they", "PRON"),
    "her": ("her", "PRON"), "his": ("his", "PRON"), "hers": ("hers", "PRON"),
    "its": ("its", "PRON"), "their": ("their", "PRON"), "theirs": ("theirs", "PRON"),
    "i": ("I", "PRON"), "me": ("I", "PRON"), "my": ("my", "PRON"), "mine": ("mine", "PRON"),
    "we": ("we", "PRON"), "us": ("we", "PRON"), "our": ("our", "PRON"),
    "you": ("you", "PRON"), "your": ("your", "PRON"),
    "himself": ("himself", "PRON"), "herself": ("herself", "PRON"),
    "itself": ("itself", "PRON"), "themselves": ("themselves", "PRON"),
    "someone": ("someone", "PRON"), "anyone": ("anyone", "PRON"),
    "everyone": ("everyone", "PRON"), "nobody": ("nobody", "PRON"),
    "something": ("something", "PRON"), "anything": ("anything", "PRON"),
    "everything": ("everything", "PRON"), "nothing": ("nothing", "PRON"),
    "none": ("none", "PRON"), "who": ("who", "PRON"), "whom": ("whom", "PRON"),
    "what": ("what", "PRON"),

    "was": ("be", "AUX"), "were": ("be", "AUX"), "is": ("be", "AUX"),
    "are": ("be", "AUX"), "am": ("be", "AUX"), "be": ("be", "AUX"),
    "been": ("be", "AUX"), "being": ("be", "AUX"),
    "would": ("would", "AUX"), "could": ("could", "AUX"), "should": ("should", "AUX"),
    "might": ("might", "AUX"), "must": ("must", "AUX"), "will": ("will", "AUX"),
    "shall": ("shall", "AUX"), "may": ("may", "AUX"), "can": ("can", "AUX"),
    "cannot": ("can", "AUX"),

    "not": ("not", "PART"),

    "in": ("in", "ADP"), "on": ("on", "ADP"), "at": ("at", "ADP"),
    "by": ("by", "ADP"), "for": ("for", "ADP"), "from": ("from", "ADP"),
    "of": ("of", "ADP"), "with": ("with", "ADP"), "into": ("into", "ADP"),
    "onto": ("onto", "ADP"), "upon": ("upon", "ADP"), "over": ("over", "ADP"),
    "under": ("under", "ADP"), "above": ("above", "ADP"), "below": ("below", "ADP"),
    "between": ("between", "ADP"), "among": ("among", "ADP"),
    "through": ("through", "ADP"), "across": ("across", "ADP"),
    "against": ("against", "ADP"), "along": ("along", "ADP"),
    "near": ("near", "ADP"), "behind": ("behind", "ADP"), "beside": ("beside", "ADP"),
    "beyond": ("beyond", "ADP"), "within": ("within", "ADP"),
    "without": ("without", "ADP"), "toward": ("toward", "ADP"),
    "towards": ("towards", "ADP"), "off": ("off", "ADP"), "up": ("up", "ADP"),
    "down": ("down", "ADP"), "around": ("around", "ADP"), "like": ("like", "ADP"),
    "during": ("during", "ADP"), "past": ("past", "ADP"), "than": ("than", "ADP"),
    "about": ("about", "ADP"),

    "and": ("and", "CCONJ"), "but": ("but", "CCONJ"), "or": ("or", "CCONJ"),
    "nor": ("nor", "CCONJ"),

    "if": ("if", "SCONJ"), "because": ("because", "SCONJ"),
    "while": ("while", "SCONJ"), "though": ("though", "SCONJ"),
    "although": ("although", "SCONJ"), "unless": ("unless", "SCONJ"),
    "as": ("as", "SCONJ"), "whether": ("whether", "SCONJ"),

    "when": ("when", "ADV"), "where": ("where", "ADV"), "why": ("why", "ADV"),
    "how": ("how", "ADV"),

    "which": ("which", "PRON"),

    "one": ("one", "NUM"), "two": ("two", "NUM"), "three": ("three", "NUM"),
    "four": ("four", "NUM"), "five": ("five", "NUM"), "six": ("six", "NUM"),
    "seven": ("seven", "NUM"), "ten": ("ten", "NUM"), "twelve": ("twelve", "NUM"),
    "twenty": ("twenty", "NUM"), "forty": ("forty", "NUM"),
    "hundred": ("hundred", "NUM"), "half": ("half", "NOUN"),
}

# context-dependent forms get explicit reading lists (default first)
AMBIGUOUS = {
    "to": [("to", "ADP"), ("to", "PART")],
    "there": [("there", "ADV"), ("there", "PRON")],
    "have": [("have", "VERB"), ("have", "AUX")],
    "has": [("have", "VERB"), ("have", "AUX")],
    "had": [("have", "VERB"), ("have", "AUX")],
    "do": [("do", "VERB"), ("do", "AUX")],
    "does": [("do", "VERB"), ("do", "AUX")],
    "did": [("do", "VERB"), ("do", "AUX")],
    "before": [("before", "ADP"), ("before", "SCONJ")],
    "after": [("after", "ADP"), ("after", "SCONJ")],
    "until": [("until", "ADP"), ("until", "SCONJ")],
    "since": [("since", "ADP"), ("since", "SCONJ")],
    "back": [("back", "ADV"), ("back", "NOUN")],
    "home": [("home", "ADV"), ("home", "NOUN")],
    "well": [("well", "ADV"), ("well", "NOUN")],
    "out": [("out", "ADV"), ("out", "ADP")],
    "inside": [("inside", "ADV"), ("inside", "ADP")],
    "outside": [("outside", "ADV"), ("outside", "ADP")],
    "rose": [("rise", "VERB"), ("rose", "NOUN")],
    "ground": [("ground", "NOUN"), ("grind", "VERB")],
    "saw": [("see", "VERB"), ("saw", "NOUN")],
    "left": [("leave", "VERB"), ("left", "ADJ")],
    "light": [("light", "NOUN"), ("light", "ADJ")],
    "watch": [("watch", "NOUN"), ("watch", "VERB")],
    "work": [("work", "NOUN"), ("work", "VERB")],
    "walk": [("walk", "NOUN"), ("walk", "VERB")],
    "rest": [("rest", "NOUN"), ("rest", "VERB")],
    "talk": [("talk", "NOUN"), ("talk", "VERB")],
    "call": [("call", "NOUN"), ("call", "VERB")],
    "look": [("look", "NOUN"), ("look", "VERB")],
    "sleep": [("sleep", "NOUN"), ("sleep", "VERB")],
    "answer": [("answer", "NOUN"), ("answer", "VERB")],
    "visit": [("visit", "NOUN"), ("visit", "VERB")],
    "help": [("help", "NOUN"), ("help", "VERB")],
    "count": [("count", "NOUN"), ("count", "VERB")],
    "close": [("close", "ADJ"), ("close", "VERB")],
    "open": [("open", "ADJ"), ("open", "VERB")],
    "clean": [("clean", "ADJ"), ("clean", "VERB")],
    "dry": [("dry", "ADJ"), ("dry", "VERB")],
    "warm": [("warm", "ADJ"), ("warm", "VERB")],
    "wound": [("wound", "NOUN"), ("wind", "VERB")],
    "felt": [("feel", "VERB"), ("felt", "NOUN")],
    "round": [("round", "ADJ"), ("round", "ADP")],
    "free": [("free", "ADJ"), ("free", "VERB")],
    "name": [("name", "NOUN"), ("name", "VERB")],
    "place": [("place", "NOUN"), ("place", "VERB")],
    "turn": [("turn", "NOUN"), ("turn", "VERB")],
    "wait": [("wait", "NOUN"), ("wait", "VERB")],
    "trust": [("trust", "NOUN"), ("trust", "VERB")],
    "smile": [("smile", "NOUN"), ("smile", "VERB")],
    "nod": [("nod", "NOUN"), ("nod", "VERB")],
    "mind": [("mind", "NOUN"), ("mind", "VERB")],
    "last": [("last", "ADJ"), ("last", "VERB")],
    "lot": [("lot", "NOUN")],
    "flooded": [("flood", "VERB"), ("flooded", "ADJ")],
    "waste": [("waste", "NOUN"), ("waste", "VERB")],
    "blame": [("blame", "NOUN"), ("blame", "VERB")],
    "cross": [("cross", "VERB"), ("cross", "ADJ")],
    "repair": [("repair", "NOUN"), ("repair", "VERB")],
    "offer": [("offer", "NOUN"), ("offer", "VERB")],
    "trouble": [("trouble", "NOUN"), ("trouble", "VERB")],
    "fair": [("fair", "ADJ"), ("fair", "NOUN")],
    "ship": [("ship", "NOUN"), ("ship", "VERB")],
    "aboard": [("aboard", "ADV"), ("aboard", "ADP")],
    "sound": [("sound", "NOUN"), ("sound", "VERB")],
    "face": [("face", "NOUN"), ("face", "VERB")],
    "hurt": [("hurt", "VERB"), ("hurt", "NOUN")],
    "flag": [("flag", "NOUN"), ("flag", "VERB")],
    "lead": [("lead", "VERB"), ("lead", "NOUN")],
    "spring": [("spring", "NOUN"), ("spring", "VERB")],
    "fall": [("fall", "VERB"), ("fall", "NOUN")],
    "stand": [("stand", "VERB"), ("stand", "NOUN")],
    "show": [("show", "VERB"), ("show", "NOUN")],
    "drink": [("drink", "NOUN"), ("drink", "VERB")],
    "share": [("share", "NOUN"), ("share", "VERB")],
    "wrong": [("wrong", "ADJ"), ("wrong", "NOUN")],
    "right": [("right", "ADJ"), ("right", "NOUN")],
    "good": [("good", "ADJ"), ("good", "NOUN")],
    "found": [("find", "VERB"), ("found", "VERB")],
    "early": [("early", "ADV"), ("early", "ADJ")],
    "late": [("late", "ADV"), ("late", "ADJ")],
    "long": [("long", "ADJ"), ("long", "ADV")],
    "hard": [("hard", "ADV"), ("hard", "ADJ")],
    "fast": [("fast", "ADV"), ("fast", "ADJ")],
    "still": [("still", "ADV"), ("still", "ADJ")],
    "daily": [("daily", "ADJ"), ("daily", "ADV")],
}

# singular[:plural]; default plural adds -s, y->ies handled by rule
NOUNS = """
morning evening night day week month year winter summer spring autumn hour minute moment
sea wave:waves tide shore cliff rock stone sand foam gull:gulls wind storm rain fog mist frost snow ice
sky star:stars moon sun cloud horizon dusk dawn darkness daylight shadow:shadows
lamp wick oil flame lantern glass lens beam tower stair:stairs rail ledge gallery vault
keeper niece nephew uncle aunt widow fisherman:fishermen doctor innkeeper boy girl man:men woman:women child:children friend neighbor stranger visitor crowd family
boat sail mast oar net rope line hook anchor deck hull tiller catch fish:fish herring crab:crabs basket barrel crate
harbor pier jetty quay village street road path track gate fence wall yard square corner bend
house cottage inn kitchen parlor hall room attic cellar chimney hearth fire stove oven pot kettle pan cup plate bowl spoon knife:knives loaf:loaves bread butter cheese tea ale soup stew supper dinner breakfast meal
door window shutter latch key lock step:steps floor ceiling roof beam:beams plank board nail hammer bucket broom mop rag
letter envelope stamp ink pen paper page book:books shelf:shelves desk chair table bench bed blanket pillow candle clock
garden rose:roses flower seed root branch leaf:leaves tree oak elm hedge grass weed:weeds soil spade rake barrow pail
coat cloak hat scarf glove:gloves boot:boots shoe:shoes dress apron shirt collar button pocket wool thread needle loom cloth ribbon shawl
medicine bottle bag pill powder fever cough cold wound bandage pulse heart chest breath
word:words voice sound echo silence song tune hymn bell note music laughter whisper shout cry tale story news question reply promise secret truth lie doubt hope fear grief joy pride shame anger patience courage
clockmaker apprentice banker singer curate inspector sergeant constable thief judge clerk mayor baker butcher grocer tailor smith miller carter porter sailor captain cart
clock:clocks gear spring:springs wheel pivot dial hand:hands face chime pendulum case workshop bench vice file tool:tools brass copper silver gold iron steel dust grain
bank ledger coin:coins note:notes debt loan rent price sum purse safe vault receipt account paper:papers contract
theatre stage curtain seat audience rehearsal concert piano violin organ choir
church tower:towers pew altar sermon prayer parish grave churchyard chapel
shop window:windows sign counter scale till customer flower:flowers stall market
badge whistle report case:cases clue trace footprint witness suspect crime theft alley lamplight notebook pencil
estate manor library study drawing gallery:galleries portrait frame carpet curtain:curtains stable horse:horses saddle bridle carriage coach wheel:wheels lane meadow field brook pond park
butler governess maid cook footman groom gardener guest colonel cousin ladyship tenant servant:servants
lesson:lessons globe map slate chalk schoolroom nursery
card:cards game wager dice chess
rifle medal uniform war regiment march
silver:silvers tray teapot cabinet pantry linen napkin
ash ember spark smoke soot coal log kindling
noise footstep:footsteps knock creak draft chill warmth glow gleam
reason habit custom duty errand task chore favor business trouble matter affair chance luck fortune fate
corner:corners edge middle end beginning side top bottom front surface depth height distance mile yard:yards inch:inches foot:feet
morning:mornings evening:evenings night:nights day:days
point
arm leg shoulder head eye:eyes ear:ears nose mouth lip:lips chin cheek brow hair beard finger:fingers thumb knee neck skin bone
ship deck:decks cargo wreck voyage passage chart compass
pipe tobacco match:matches
well:wells
noon afternoon midnight death mother father husband wife:wives son daughter sister brother
bean:beans milk supper loaf:loaves flask jug straw sack mug feast
coast south north east west bay
cost loss:losses repair:repairs waste debt:debts
mail office agent bookseller city bakery fiddler teller
life:lives time:times thing:things people pair peace money luck blame
forgiveness stubbornness tiredness relief praise nursing fold:folds
driftwood garrison lighthouse
"""

# base past [participle]; participle defaults to the past form
VERBS = """
walk walked
carry carried
mend mended
watch watched
open opened
close closed
climb climbed
clean cleaned
trim trimmed
fill filled
light lit
burn burned
polish polished
wind wound
turn turned
pull pulled
push pushed
lift lifted
drop dropped
hold held
keep kept
bring brought
take took taken
give gave given
go went gone
come came come
see saw seen
hear heard
say said
tell told
ask asked
answer answered
reply replied
speak spoke spoken
talk talked
call called
know knew known
think thought
believe believed
remember remembered
forget forgot forgotten
find found
lose lost
look looked
seem seemed
appear appeared
stay stayed
remain remained
leave left
arrive arrived
return returned
reach reached
pass passed
cross crossed
follow followed
lead led
meet met
greet greeted
visit visited
help helped
thank thanked
wait waited
stand stood
sit sat
lie lay lain
rise rose risen
fall fell fallen
sleep slept
wake woke woken
dream dreamed
rest rested
work worked
read read
write wrote written
send sent
receive received
sign signed
fold folded
seal sealed
post posted
count counted
pay paid
owe owed
lend lent
borrow borrowed
spend spent
save saved
buy bought
sell sold
trade traded
weigh weighed
measure measured
cut cut
saw sawed
hammer hammered
nail nailed
fix fixed
build built
repair repaired
break broke broken
shatter shattered
crack cracked
bend bent
straighten straightened
tie tied
untie untied
knot knotted
cast cast
haul hauled
row rowed
sail sailed
anchor anchored
moor moored
launch launched
drift drifted
sink sank sunk
float floated
swim swam swum
fish fished
catch caught
gut gutted
salt salted
smoke smoked
dry dried
cook cooked
bake baked
boil boiled
stir stirred
pour poured
serve served
eat ate eaten
drink drank drunk
taste tasted
smell smelled
feel felt
touch touched
grip gripped
grasp grasped
wave waved
nod nodded
smile smiled
laugh laughed
weep wept
sigh sighed
frown frowned
stare stared
glance glanced
peer peered
notice noticed
observe observed
study studied
examine examined
search searched
hunt hunted
seek sought
discover discovered
reveal revealed
hide hid hidden
cover covered
uncover uncovered
bury buried
dig dug
plant planted
water watered
weed weeded
prune pruned
gather gathered
pick picked
collect collected
stack stacked
store stored
lock locked
unlock unlocked
bolt bolted
guard guarded
protect protected
warn warned
threaten threatened
fear feared
worry worried
trust trusted
doubt doubted
suspect suspected
accuse accused
deny denied
admit admitted
confess confessed
promise promised
swear swore sworn
agree agreed
refuse refused
insist insisted
beg begged
pray prayed
sing sang sung
play played
dance danced
hum hummed
whistle whistled
ring rang rung
chime chimed
strike struck
tick ticked
stop stopped
start started
begin began begun
finish finished
end ended
continue continued
try tried
manage managed
fail failed
succeed succeeded
win won
learn learned
teach taught
show showed shown
explain explained
describe described
mention mentioned
repeat repeated
whisper whispered
shout shouted
cry cried
mutter muttered
murmur murmured
grumble grumbled
complain complained
listen listened
wonder wondered
decide decided
choose chose chosen
prefer preferred
want wanted
wish wished
hope hoped
need needed
mean meant
matter mattered
happen happened
occur occurred
change changed
grow grew grown
shrink shrank shrunk
fade faded
darken darkened
brighten brightened
shine shone
glow glowed
flicker flickered
gleam gleamed
glitter glittered
sparkle sparkled
blow blew blown
howl howled
roar roared
rattle rattled
shake shook shaken
tremble trembled
shiver shivered
creak creaked
groan groaned
crash crashed
thunder thundered
pound pounded
beat beat beaten
knock knocked
tap tapped
step stepped
stride strode
hurry hurried
rush rushed
run ran run
race raced
chase chased
escape escaped
flee fled
wander wandered
stroll strolled
limp limped
stumble stumbled
slip slipped
slide slid
creep crept
crawl crawled
jump jumped
leap leapt
duck ducked
kneel knelt
bow bowed
stoop stooped
lean leaned
settle settled
gaze gazed
name named
place placed
set set
put put
lay laid
hang hung
wear wore worn
dress dressed
wash washed
scrub scrubbed
sweep swept
dust dusted
tidy tidied
iron ironed
sew sewed sewn
knit knitted
spin spun
weave wove woven
patch patched
darn darned
stitch stitched
die died
live lived
marry married
raise raised
love loved
miss missed
mourn mourned
remind reminded
belong belonged
own owned
inherit inherited
sell sold
rent rented
move moved
travel traveled
ride rode ridden
drive drove driven
draw drew drawn
paint painted
sketch sketched
carve carved
oil oiled
grease greased
wipe wiped
rub rubbed
scratch scratched
test tested
check checked
adjust adjusted
wind wound
balance balanced
steady steadied
free freed
smooth smoothed
sharpen sharpened
grind ground
press pressed
stamp stamped
tear tore torn
mind minded
tend tended
nurse nursed
heal healed
cure cured
recover recovered
improve improved
worsen worsened
faint fainted
cough coughed
breathe breathed
rescue rescued
save saved
drown drowned
warn warned
signal signaled
wave waved
spot spotted
track tracked
question questioned
interview interviewed
record recorded
note noted
report reported
solve solved
prove proved proven
arrest arrested
charge charged
release released
last lasted
throw threw thrown
add added
flood flooded
like liked
make made
offer offered
ship shipped
trouble troubled
waste wasted
blame blamed
share shared
flag flagged
"""

ADJECTIVES = """
old young new ancient long short tall small little large great big
grey gray white black red blue green brown yellow golden silver pale dark bright dim
quiet loud silent calm rough smooth gentle fierce wild tame
cold warm hot cool damp wet dry frozen icy mild bitter raw
heavy light thin thick narrow wide broad deep shallow steep flat level crooked straight
empty full hollow solid bare plain rich poor cheap dear
tired weary sick ill weak strong healthy sturdy frail lame blind deaf
happy glad sad sorry lonely anxious afraid nervous angry cross patient kind cruel stern gruff
honest true false sly careful careless wise foolish clever dull sharp blunt
busy idle slow quick fast sudden steady ready
strange familiar odd curious certain sure clear obvious secret hidden
good bad fine splendid handsome pretty ugly neat tidy shabby worn rusty dusty muddy
fresh stale sweet sour salty bitter
near distant far absent present
proper decent humble proud vain modest
whole broken cracked torn loose tight firm
soft hard tender rough
next last first second third final former latter
only very same other such own
older younger elder eldest youngest
better best worse worst
high low upper lower inner outer
many few several much more most
awake asleep alive dead
open shut
serious grave solemn cheerful merry pleasant grim
faint slight deep heavy
foggy misty stormy windy rainy snowy frosty starry moonlit
wooden iron brass copper stone glass velvet linen woolen leather
darkest largest loudest smallest greatest finest strongest longest
lucky unlucky spare stiff uneasy missing trading fourth fifth
quicker slower louder quieter harder softer warmer colder brighter darker
"""

ADVERBS = """
slowly quickly quietly softly loudly gently carefully carelessly suddenly
often seldom rarely never always sometimes usually finally eventually
soon now then there here away back home
again once twice almost nearly quite very too so rather enough
only just even still yet already perhaps maybe indeed instead
together apart alone aside forward backward upstairs downstairs ashore aloud
tonight today tomorrow yesterday
well
far nearer deeper higher lower
anywhere everywhere somewhere nowhere
barely hardly scarcely
truly really certainly surely probably possibly
soon sooner
first twice
firmly briskly stiffly warmly coldly kindly sternly gravely cheerfully politely
plainly clearly faintly dimly brightly
at_once
"""

PROPER = """
Edwin Marsh Cora Tom Leach Agnes Hale Philip Reed Doctor Martha Bell Daniel Dan
Harrow Point Saltby
Aurel Finch Jonas Mister Crane Lucia Moran Harriet Voss Inspector Samuel Pye Greta Klein
Vellum Street George
Evelyn Lady Stroud Frederick Fred Ivy Lane Miss Natt Rush Colonel Polly
Fennick Hall London Christmas Sunday Monday Saturday June January November God
December February March Merle Quill England
"""


def strip_multiword(words):
    return [w for w in words if "_" not in w]
