'''
Flag levels and codes for findings of a relation check.
'''
import collections


class Flagable(object):
    '''
    Collects findings keyed by level while relations are checked on the
    weight spaces of one (n, d).
    '''

    FLAG_LEVELS = {'minor': 0,
                   'interpreted': 3,
                   'warning': 5,
                   'error': 8,
                   'fatal': 10}
    FLAG_LEVEL_CODES = {v: k for k, v in FLAG_LEVELS.items()}

    # Levels at or above this fail a report
    BLOCKING_LEVEL = FLAG_LEVELS['error']

    _ACTUAL_FLAGS = {
        'relation-failed': ('error', "Relation does not hold on a sample polynomial"),
        'not-polynomial': ('fatal', "Symmetrized operator value has a non-polynomial remainder"),
        'vacuous-relation': ('minor', "Relation has no index pair for this n and was skipped"),
        'cleared-denominator': ('minor', "Cleared a binomial denominator after symmetrization"),
        'printed-form-unverifiable': ('interpreted',
                                      "Printed closed form disagrees with the generating series"),
        'commuting-operators': ('interpreted', "Relation holds between commuting multiplication operators"),
    }

    # Misspelled codes still produce a readable warning
    FLAGS = collections.defaultdict(lambda: "Unrecognized flag code")
    FLAGS.update({code: message for code, (_, message) in _ACTUAL_FLAGS.items()})
    CODE_LEVELS = collections.defaultdict(lambda: 'warning')
    CODE_LEVELS.update({code: level for code, (level, _) in _ACTUAL_FLAGS.items()})

    FlagLevelTuple = collections.namedtuple('FlagLevelTuple',
                                            ['level', 'location', 'component', 'message'])

    def flag_change(self, flags, level, location=None, component=None, message=''):
        '''
        Appends one finding under its level name. Numeric levels are mapped
        to their names; unknown numbers count as fatal.
        '''
        if not isinstance(level, str):
            level = self.FLAG_LEVEL_CODES.get(level, 'fatal')
        ftuple = self.FlagLevelTuple(level, location or (), component, message)
        flags.setdefault(level, []).append(ftuple)

    def flag_code(self, flags, code, location=None, component=None, detail=None):
        '''
        Records a coded finding at the code's level, with an optional detail
        appended to the code's message.
        '''
        message = self.FLAGS[code]
        if detail:
            message = "{}: {}".format(message, detail)
        self.flag_change(flags, self.CODE_LEVELS[code], location, component, message)

    def get_worst_flag_level(self, flags):
        '''
        Name of the worst level present; 'minor' when there are no flags.
        '''
        worst = max((self.FLAG_LEVELS[name] for name in flags), default=0)
        return self.FLAG_LEVEL_CODES[worst]

    @classmethod
    def is_blocking(cls, level_name):
        return cls.FLAG_LEVELS[level_name] >= cls.BLOCKING_LEVEL

    @staticmethod
    def flags_to_json(flags):
        return {level: [flag.message for flag in entries] for level, entries in sorted(flags.items())}
