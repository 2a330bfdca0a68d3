"""Hand-written word bank for the corpus generator.

Stems are grouped by theme (nouns) and by syntactic role; the generator
inflects them through ``morph`` and samples sentences from templates.
Everything is lowercase a-z; apostrophes appear only in contractions and
possessives built downstream.
"""

NOUN_THEMES = {
    "home": tuple(
        """house home room door window wall floor roof kitchen table chair bed lamp
        couch desk drawer mirror carpet curtain stair garage garden yard fence gate
        porch closet attic basement hallway ceiling shelf cupboard sink oven stove
        pillow blanket towel bucket broom key lock clock candle picture frame vase
        rug bench stool cradle""".split()
    ),
    "nature": tuple(
        """tree leaf branch root flower grass bush forest wood field hill mountain
        valley river stream lake pond ocean sea beach sand stone rock cliff cave
        island sky cloud rain snow ice wind storm thunder lightning sun moon star
        planet earth ground soil mud dust fire smoke ash wave tide shadow fog mist
        frost dew pebble boulder meadow swamp desert jungle shore bank breeze""".split()
    ),
    "animals": tuple(
        """dog cat bird fish horse cow pig sheep goat chicken duck goose rabbit
        mouse rat squirrel fox wolf bear deer lion tiger elephant monkey snake frog
        turtle spider bee ant worm moth owl hawk crow robin whale shark seal crab
        puppy kitten lamb calf pony donkey camel bat eagle swan pigeon sparrow
        beetle snail lizard hen rooster bull ox mole hedgehog otter badger""".split()
    ),
    "food": tuple(
        """bread butter cheese milk egg meat beef pork ham bacon soup stew salad
        rice pasta noodle sauce pepper salt sugar honey jam cake pie cookie candy
        chocolate fruit apple orange banana grape berry lemon peach pear plum cherry
        melon potato carrot onion bean pea corn tomato lettuce mushroom tea coffee
        juice water wine beer dinner lunch breakfast meal snack dish plate bowl cup
        glass fork spoon knife napkin tray pot pan kettle loaf crust dough flour
        cream toast porridge pancake sausage pickle spice herb garlic ginger""".split()
    ),
    "body": tuple(
        """head face eye ear nose mouth lip tooth tongue chin cheek neck shoulder
        arm elbow wrist hand finger thumb chest waist hip leg knee ankle foot toe
        heel skin hair beard bone muscle heart blood brain voice breath smile frown
        palm fist brow lap throat lung stomach rib spine jaw""".split()
    ),
    "clothing": tuple(
        """shirt coat jacket sweater dress skirt sock shoe boot hat cap glove scarf
        belt button pocket sleeve collar suit vest ring watch purse wallet apron
        slipper sandal blouse gown robe uniform badge buckle lace heel cuff""".split()
    ),
    "people": tuple(
        """man woman child boy girl baby friend neighbor stranger guest family
        mother father parent son daughter brother sister uncle aunt cousin
        grandmother grandfather husband wife person crowd team group partner leader
        member owner doctor nurse teacher student farmer baker cook driver soldier
        sailor captain king queen prince princess judge lawyer clerk guard artist
        poet actor pilot chef waiter barber tailor miner hunter merchant servant
        maid twin elder youth fellow lad scholar priest mayor general colonel""".split()
    ),
    "places": tuple(
        """city town village street road path bridge corner square park market shop
        store bank school library church temple hospital office factory farm barn
        mill station airport harbor port hotel museum theater stadium prison castle
        tower palace cabin cottage hut tent camp playground pool court alley lane
        avenue district region country border coast capital suburb plaza inn
        bakery butchery pharmacy garage""".split()
    ),
    "vehicles": tuple(
        """car truck bus train tram bike bicycle motorcycle boat ship ferry plane
        rocket wagon cart sled taxi van wheel engine brake seat trunk ticket sail
        anchor oar paddle mast deck cargo crew""".split()
    ),
    "time": tuple(
        """day night morning evening afternoon hour minute second week
        month year season spring summer autumn winter moment future present
        holiday birthday weekend century decade dawn dusk sunrise sunset era age
        pause delay schedule deadline""".split()
    ),
    "abstract": tuple(
        """idea thought dream hope fear joy anger love pride shame luck chance
        choice reason cause effect result answer question problem secret truth lie
        story tale news word name number fact plan goal aim wish habit skill talent
        courage patience wisdom knowledge memory mind spirit soul mood feeling sense
        doubt belief faith trust honor duty law rule order peace war battle victory
        defeat danger safety risk advice favor gift prize reward price cost value
        worth wealth money coin cash debt tax trade deal offer job task chore effort
        game sport race journey trip tour visit meeting party event festival wedding
        funeral ceremony speech lecture debate argument promise threat warning
        mistake error fault blame praise respect mercy glory fame honor power
        strength energy force motion speed weight height depth width length size
        shape form pattern style manner way method system process stage step level
        rank grade score total sum amount share portion piece part bit detail item
        point dot spot mark trace clue sign signal hint code message report record
        account note list chart map""".split()
    ),
    "objects": tuple(
        """paper pen pencil ink book page letter card envelope stamp label box bag
        basket bottle jar can tin tool hammer screw drill axe blade rope string
        thread needle pin chain wire cable hook ladder brush comb soap sponge cloth
        ribbon glue tape metal iron steel gold silver copper brick clay cotton wool
        silk leather rubber plastic oil fuel coal gas lantern torch mirror bell
        drum horn flute violin piano guitar radio camera phone computer keyboard
        screen machine device television film movie song tune poem verse painting
        statue toy doll kite ball balloon puzzle coin medal trophy flag banner
        umbrella cane crutch spear shield sword bow arrow trap net cage jarful""".split()
    ),
    "school": tuple(
        """lesson class course test exam grade chalk board homework essay notebook
        diary journal chapter title index glossary margin eraser ruler compass
        globe atlas diploma degree subject topic theme thesis proof example
        exercise drill quiz riddle puzzle answer sheet folder binder""".split()
    ),
    "compounds": tuple(
        """bedroom bathroom classroom workshop bookshop bookcase bookshelf textbook
        cookbook handbook newspaper sunlight moonlight daylight firewood fireplace
        firework doorway doorbell doorstep keyhole staircase backyard courtyard
        farmhouse greenhouse lighthouse warehouse household housework artwork
        network framework footpath footprint footstep fingertip fingerprint
        handshake handwriting wallpaper windowsill tablecloth teapot teacup
        teaspoon tablespoon saucepan raincoat rainbow raindrop snowflake snowman
        snowball sunshine sunflower seashore seaside seaweed seafood shipwreck
        sailboat rowboat airplane airfield butterfly dragonfly firefly ladybug
        grasshopper woodpecker haircut headache toothache backache eyesight eyebrow
        eyelid armchair wheelchair wheelbarrow postman fireman mailbox toolbox
        lunchbox sandbox football basketball baseball volleyball motorway driveway
        highway railway runway subway waterfall watermelon overcoat bedtime
        lunchtime daytime nighttime lifetime springtime seatbelt earring necklace
        bracelet headline deadline weekday birthplace homeland campfire
        campsite playtime daybreak nightfall rainstorm sandstorm thunderstorm
        windmill watermill sawmill treetop hilltop rooftop mountaintop
        countryside hillside roadside bedside fireside outline outlook
        outcome outfit input output upkeep
        forecast handful spoonful mouthful armful""".split()
    ),
}

# nouns that never pluralize and never take a/another/each/every
MASS_NOUNS = frozenset(
    """bread butter cheese milk rice pasta honey jam tea coffee juice water wine
    beer flour cream toast porridge bacon beef pork meat dough lettuce corn
    garlic ginger sugar salt sand ice snow rain mud dust smoke fog mist frost
    dew soil earth grass thunder lightning blood courage patience wisdom
    knowledge luck pride shame anger love peace advice money cash wealth worth
    fame glory mercy respect praise blame strength energy news safety trust
    faith ink glue tape metal iron steel gold silver copper clay cotton wool
    silk leather rubber plastic oil fuel coal gas firewood sunlight moonlight
    daylight sunshine housework homework artwork seaweed seafood handwriting
    eyesight upkeep chalk""".split()
)

# transitive verbs take an object slot in the templates
VERBS_TRANSITIVE = tuple(
    """take make bring carry hold lift drop push pull throw catch kick hit strike
    touch grab seize pick choose buy sell pay lend borrow give send receive keep
    save store lose find seek hunt chase follow lead guide show teach read write
    draw paint sketch sign copy print type erase open close lock shut cover wrap
    tie cut chop slice peel mix stir pour fill empty wash clean wipe sweep scrub
    polish dry heat warm cool freeze melt burn light watch see hear smell taste
    feel love hate like enjoy prefer want need ask tell answer call name greet
    thank blame forgive warn invite visit meet join leave help serve feed dress
    wear build fix repair mend break bend fold stretch shake move place put set
    lay hang raise lower turn spin roll slide drive ride steer park plant water
    harvest gather collect count measure weigh compare test try use spend waste
    share divide split connect attach know understand remember forget believe
    doubt imagine consider expect notice observe study solve guess prove explain
    describe discuss mention promise offer refuse accept deny admit claim report
    state declare trust respect admire praise honor protect defend attack destroy
    damage ruin spoil waste repeat review revise correct improve complete finish
    start begin continue stop support oppose allow forbid permit order command
    request demand earn win steal hide bury dig lift sew knit weave stitch iron
    learn plan own discover
    fry bake boil roast grill season taste serve pack unpack load unload deliver
    fetch toss fling hurl nudge shove drag haul tow tug squeeze pinch scratch rub
    stroke pat tap press twist snap crack smash crush grind chew swallow sip
    drink eat bite lick hug kiss hold carry teach feed wake dress comb brush""".split()
)

VERBS_INTRANSITIVE = tuple(
    """go come run walk jump hop skip crawl climb swim dive float sink fall rise
    sing fight
    stand sit sleep wake rest stay wait remain arrive depart travel wander roam
    march hurry rush dance laugh smile cry weep sigh groan shout yell whisper
    speak talk chat listen look stare glance blink nod kneel bow breathe cough
    sneeze yawn shiver tremble work play happen occur appear disappear vanish
    emerge pause hesitate succeed fail matter seem grow shine glow fade bloom
    wilt rot boil flow drip leak splash spill ring echo bang crash boom squeak
    creak rattle hum buzz whistle bark meow roar growl chirp gallop trot stroll
    stumble trip slip slide drift soar glide hover land settle gather scatter
    spread shrink swell bounce swing sway lean bend stretch relax struggle
    suffer recover improve worsen change vary differ agree disagree complain
    apologize argue joke dream think care worry hope pray wave point frown
    blush sweat freeze starve thrive prosper fade retire resign graduate""".split()
)

ADJECTIVES = tuple(
    """big small large little long short tall wide narrow thick thin deep shallow
    high low heavy light fast slow quick early late new old young fresh stale
    clean dirty neat messy tidy empty full open closed near far close distant hot
    cold warm cool mild wet dry damp moist soft hard smooth rough sharp dull
    bright dark dim pale clear cloudy foggy sunny rainy snowy windy stormy calm
    quiet loud noisy silent strong weak firm loose tight slack rich poor cheap
    costly dear free busy idle lazy active lively tired weary sleepy awake alert
    eager keen bored happy sad glad sorry angry mad cross upset nervous anxious
    worried afraid scared brave bold shy timid proud humble modest vain kind
    cruel mean gentle rude polite friendly hostile honest false true real fake
    genuine loyal faithful jealous greedy generous selfish wise foolish silly
    clever smart stupid dumb simple complex plain fancy pretty beautiful lovely
    handsome ugly cute sweet sour bitter salty spicy bland tasty delicious hungry
    thirsty sick ill healthy fit safe dangerous risky important urgent serious
    funny strange odd weird normal common rare unique special ordinary usual
    typical perfect broken whole complete partial ready modern ancient recent
    current former final last next main chief major minor grand great good bad
    fine nice awful terrible horrible dreadful wonderful amazing splendid superb
    excellent decent fair unfair equal even level flat steep round curved
    straight crooked bent twisted smooth golden silver wooden woolen silken
    leather plastic rubber glass stone iron steel brass velvet humble noble
    royal loyal local global national foreign native wild tame ripe raw tender
    tough crisp brittle sturdy fragile solid hollow dense sparse vast tiny huge
    giant immense slight severe harsh gentle bleak grim cheerful gloomy merry
    jolly lonely crowded vacant absent present eager patient restless steady
    sudden gradual swift rapid instant frequent constant temporary permanent
    daily weekly monthly yearly annual seasonal early tardy prompt punctual
    homesick""".split()
)

# adjectives that take the negating un- prefix naturally
UN_ADJECTIVES = tuple(
    """happy kind fair true safe clear clean tidy common usual equal even steady
    ripe known certain sure likely lucky pleasant friendly healthy wise grateful
    aware willing able stable usable readable broken locked armed dressed cut
    washed painted planned cooked opened settled wanted expected invited""".split()
)

# verbs that take the repeating re- prefix naturally
RE_VERBS = tuple(
    """build paint read write open load pack fill heat start play visit check test
    count draw plant train name order number wire connect arrange appear enter
    consider gain new charge cover turn view model shape""".split()
)

# noun -> -ful / -less adjective derivations that are real words
FUL_NOUNS = tuple(
    """care use hope pain harm color power thought fear cheer joy peace play rest
    doubt faith force grace help mercy mind pity skill taste thank truth watch
    wish youth""".split()
)

LESS_NOUNS = tuple(
    """care use hope pain harm color power thought fear doubt help home heart end
    sleep taste voice weight worth name shape friend child cloud mercy motion
    breath bottom limit blame""".split()
)

# noun -> -y adjective derivations
Y_NOUNS = tuple(
    """rain snow wind cloud sand rock mud dust fog mist frost storm sun shadow
    smoke salt sugar grease oil soap juice milk cream butter water leaf grass
    bush thorn hair fur silk silver dirt rust moss hill stone""".split()
)

# adjective -> -ness quality nouns that read naturally
NESS_ADJECTIVES = tuple(
    """dark bright kind good sad glad mad soft hard sweet bitter cold warm dry wet
    quick slow quiet loud weak great small big thick thin deep shallow high low
    near close far fresh stale clean neat tidy empty full open rich poor busy
    lazy tired eager happy angry nervous brave shy proud humble rude polite
    false greedy foolish silly clever smart plain fancy
    pretty lovely ugly sour salty bland sick ill fit safe odd weird rare special
    perfect whole ready fair even flat round straight wild
    tame ripe raw tender tough crisp sturdy hollow dense vast tiny
    huge slight harsh bleak grim cheerful gloomy merry jolly lonely
    restless steady sudden swift prompt""".split()
)

# transitive verbs whose -er agent noun is a real occupation or role
AGENT_VERBS = tuple(
    """teach write paint sing dance read build farm bake drive ride hunt
    fight lead follow help keep own play work run swim climb speak listen learn
    think dream plan draw print weave knit clean wash garden mine trade
    buy sell report record count catch throw kick box wrestle race
    jump walk travel explore discover found settle rule command preach
    heal train review examine manage organize
    advise design publish interpret compose
    perform entertain juggle tumble whistle drum pipe fiddle""".split()
)

DETERMINERS = tuple(
    "the a this that these those some any no every each either neither both all "
    "most many much few several another such".split()
)

PRONOUNS_SUBJECT = tuple("i you he she it we they".split())
PRONOUNS_OBJECT = tuple("me you him her it us them".split())
POSSESSIVE_DETERMINERS = tuple("my your his her its our their".split())
PRONOUNS_OTHER = tuple(
    """mine yours hers ours theirs myself yourself himself herself itself
    ourselves themselves someone anyone everyone nobody somebody anybody
    everybody nothing something anything everything one""".split()
)

PREPOSITIONS = tuple(
    """in on at by for with from to of about above below under over behind beside
    between among through across along around past near against during before
    after until since within without beneath beyond inside outside onto into
    upon off toward""".split()
)

CONJUNCTIONS = tuple(
    "and but or nor so yet because although though while when if unless as than "
    "whether once whenever wherever".split()
)

MODALS = tuple("can could may might must shall should will would".split())

ADVERBS = tuple(
    """not now then here there very quite rather too also just still yet almost
    already soon often always never sometimes usually rarely seldom again away
    back down up out off maybe perhaps indeed instead together apart forward
    backward somewhere anywhere everywhere nowhere today tomorrow yesterday
    tonight once twice enough elsewhere meanwhile nearby overnight somehow
    somewhat anyway anyhow moreover however therefore otherwise besides""".split()
)

PLACE_ADVERBS = tuple(
    "uphill downhill downtown upstairs downstairs indoors outdoors".split()
)

QUESTION_WORDS = tuple("what who whom whose which where when why how".split())

NUMBERS = tuple(
    """one two three four five six seven eight nine ten eleven twelve thirteen
    fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty forty
    fifty sixty seventy eighty ninety hundred thousand million first second third
    fourth fifth sixth seventh eighth ninth tenth dozen""".split()
)

CONTRACTIONS = tuple(
    """don't doesn't didn't can't couldn't won't wouldn't shouldn't mustn't isn't
    aren't wasn't weren't hasn't haven't hadn't i'm i've i'll i'd you're you've
    you'll you'd he's he'll he'd she's she'll she'd it's we're we've we'll we'd
    they're they've they'll they'd that's there's here's what's who's let's""".split()
)
