package cadence

func (x *handler) run() {
	if x.ready {
		if s.cfg.EnableHistoryScavenger {
			x.apply()
		}
		if s.cfg.EnableExecutionsScanner {
			x.apply()
		}
	}
}
