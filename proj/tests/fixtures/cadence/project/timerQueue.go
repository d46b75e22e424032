package cadence

func (x *handler) run() {
	if x.ready {
		if t.config.EnableTimerDebugLogByDomainID {
			x.apply()
		}
	}
}
