package cadence

func (x *handler) run() {
	if m.EnableDebugMode {
		x.apply()
	}
}
