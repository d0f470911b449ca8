import os

_ROOT = os.path.dirname(os.path.abspath(__file__))


class Filepaths:
    __SCENARIO_FILE = 'Scenarios.json'

    @staticmethod
    def SCENARIO_FILE():
        return os.path.join(_ROOT, Filepaths.__SCENARIO_FILE)


if __name__ == '__main__':
    print(Filepaths.SCENARIO_FILE())
